// polarlab: generate constrained polynomial instances, compute certified
// circle extrema, evaluate the bound catalog, and run verification campaigns.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polarlab/io.hpp"
#include "polarlab/verifier.hpp"

namespace {

using namespace polarlab;
using io::json;

constexpr int kExitViolation = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUsage = 64;
constexpr int kExitBadData = 65;
constexpr int kExitSoftware = 70;
constexpr int kExitIo = 74;

/// "re", "im i", "re+im i" (also "i", "-i", "2i"); whitespace-free.
Complex parse_complex(const std::string& text) {
    const auto bad = [&] {
        return error(errc::precondition_violated, "cannot parse complex number '" + text + "'");
    };
    if (text.empty()) throw bad();
    std::string s = text;
    bool has_i = false;
    if (s.back() == 'i' || s.back() == 'I') {
        has_i = true;
        s.pop_back();
    }
    try {
        if (!has_i) {
            std::size_t pos = 0;
            const double re = std::stod(s, &pos);
            if (pos != s.size()) throw bad();
            return Complex(re, 0.0);
        }
        // Split "a+b" / "a-b" at the last sign that is not an exponent sign.
        std::size_t split = std::string::npos;
        for (std::size_t i = s.size(); i-- > 1;) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            const std::string imag = s.empty() || s == "+" || s == "-" ? s + "1" : s;
            return Complex(0.0, std::stod(imag));
        }
        const std::string re = s.substr(0, split);
        std::string im = s.substr(split);
        if (im == "+" || im == "-") im += "1";
        return Complex(std::stod(re), std::stod(im));
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

std::string sanitize(const std::string& label) {
    std::string out;
    for (char c : label)
        out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    while (out.find("__") != std::string::npos)
        out.erase(out.find("__"), 1);
    if (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

/// Options shared by the subcommands that take a polynomial instance.
struct InstanceOptions {
    std::string poly_file;
    std::string extremal; // "block" | "binomial"
    std::string cls;      // "top" | "bottom"
    int n = 0;
    int mu = 1;
    int m = 1;
    int idx = 1;
    std::optional<double> k;
    double kmax = 0.0; // default 2k
    std::uint64_t seed = 0;
    double scale = 1.0;
    bool strict_annulus = false;
    std::string side = "inside";
};

void add_instance_options(CLI::App* cmd, InstanceOptions& opts) {
    cmd->add_option("--poly", opts.poly_file, "polynomial or instance JSON file");
    cmd->add_option("--extremal", opts.extremal, "equality-case instance: block | binomial");
    cmd->add_option("--class", opts.cls, "random instance class: top | bottom");
    cmd->add_option("--n", opts.n, "degree");
    cmd->add_option("--mu", opts.mu, "top lacunary index");
    cmd->add_option("--m", opts.m, "bottom lacunary index");
    cmd->add_option("--idx", opts.idx, "block index for --extremal block");
    cmd->add_option("--k", opts.k, "disk radius of the class");
    cmd->add_option("--kmax", opts.kmax, "outer zero radius for --class bottom (default 2k)");
    cmd->add_option("--seed", opts.seed, "random seed");
    cmd->add_option("--scale", opts.scale, "leading coefficient scale");
    cmd->add_flag("--strict-annulus", opts.strict_annulus,
                  "exclude boundary zeros for --class bottom");
    cmd->add_option("--side", opts.side, "declared zero side for --extremal block");
}

ZeroSide parse_side(const std::string& side) {
    if (side == "inside") return ZeroSide::ZerosInsideClosedDisk;
    if (side == "zerofree") return ZeroSide::ZeroFreeOpenDisk;
    throw error(errc::precondition_violated, "--side must be inside or zerofree");
}

GeneratedInstance build_instance(const InstanceOptions& opts, std::uint64_t seed) {
    if (!opts.poly_file.empty()) {
        GeneratedInstance inst = io::load_instance_file(opts.poly_file);
        if (opts.k) inst.poly_class.k = *opts.k;
        return inst;
    }
    const double k = opts.k.value_or(1.0);
    if (opts.extremal == "block")
        return extremal_block(opts.n, opts.idx, k, parse_side(opts.side));
    if (opts.extremal == "binomial") return extremal_binomial(opts.n, k);
    if (opts.cls == "top") return random_top_lacunary(opts.n, opts.mu, k, seed, opts.scale);
    if (opts.cls == "bottom")
        return random_bottom_lacunary_zerofree(opts.n, opts.m, k,
                                               opts.kmax > 0.0 ? opts.kmax : 2.0 * k, seed,
                                               opts.scale, opts.strict_annulus);
    throw error(errc::precondition_violated,
                "give one of --poly, --extremal block|binomial, --class top|bottom");
}

json instance_config_json(const InstanceOptions& opts) {
    json j;
    if (!opts.poly_file.empty()) j["poly"] = opts.poly_file;
    if (!opts.extremal.empty()) {
        j["extremal"] = opts.extremal;
        j["idx"] = opts.idx;
    }
    if (!opts.cls.empty()) {
        j["class"] = opts.cls;
        j["index"] = opts.cls == "top" ? opts.mu : opts.m;
        j["seed"] = opts.seed;
        j["scale"] = opts.scale;
    }
    j["n"] = opts.n;
    j["k"] = opts.k.value_or(1.0);
    return j;
}

void echo_config(const std::string& subcommand, json j) {
    j["subcommand"] = subcommand;
    std::cout << "# config " << j.dump() << '\n';
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::ios_base::failure("write to " + path + " failed");
}

void print_record(const VerificationRecord& rec) {
    std::printf("%-10s %-28s n=%-2d idx=%-2d k=%-8.5g r=%-8.5g R=%-8.5g |a|=%-8.5g\n",
                theorem_name(rec.theorem), rec.label.c_str(), rec.n, rec.index, rec.k, rec.r,
                rec.R, rec.abs_alpha);
    std::printf("  lhs = %.12g  (+/- %.3g)   rhs = %.12g\n", rec.lhs.value,
                rec.lhs.error_radius, rec.rhs);
    std::printf("  slack = %.6g   verdict = %s%s\n", rec.slack, verdict_name(rec.verdict),
                consistent_with_equality(rec) && rec.verdict != Verdict::Confirmed
                    ? " (consistent with equality)"
                    : "");
}

int verdict_exit_code(const VerificationRecord& rec) {
    switch (rec.verdict) {
        case Verdict::Confirmed: return 0;
        case Verdict::ViolationProven: return kExitViolation;
        case Verdict::Inconclusive:
            return consistent_with_equality(rec) ? 0 : kExitInconclusive;
    }
    return kExitSoftware;
}

// ---------------------------------------------------------------------------

int cmd_gen(const InstanceOptions& opts, int count, const std::string& out_dir) {
    echo_config("gen", instance_config_json(opts));
    for (int i = 0; i < count; ++i) {
        GeneratedInstance inst = build_instance(opts, opts.seed + static_cast<std::uint64_t>(i));
        const std::string path = out_dir + "/" + sanitize(inst.label) + ".json";
        io::save_json_file(path, io::instance_to_json(inst));
        std::cout << path << '\n';
    }
    return 0;
}

int cmd_extrema(const std::string& poly_file, double radius, const std::string& kind, double eps,
                const std::string& out, const std::string& format) {
    GeneratedInstance inst = io::load_instance_file(poly_file);
    echo_config("extrema",
                {{"poly", poly_file}, {"radius", radius}, {"kind", kind}, {"eps", eps}});
    if (kind != "max" && kind != "min")
        throw error(errc::precondition_violated, "--kind must be max or min");
    const CertifiedExtremum e = kind == "max" ? max_modulus(inst.poly, radius, eps)
                                              : min_modulus(inst.poly, radius, eps);
    std::printf("%s|p| on |z|=%.17g: %.17g (+/- %.3g), witness angle %.17g\n",
                kind == "max" ? "max" : "min", radius, e.value, e.error_radius, e.witness_angle);
    if (!out.empty()) {
        if (format == "csv") {
            char buf[200];
            std::snprintf(buf, sizeof buf, "kind,radius,value,error_radius,witness_angle\n%s,%.17g,%.17g,%.17g,%.17g\n",
                          kind.c_str(), radius, e.value, e.error_radius, e.witness_angle);
            write_text_file(out, buf);
        } else {
            io::save_json_file(out, io::extremum_to_json(e));
        }
    }
    return 0;
}

int cmd_bound(const std::string& theorem, const InstanceOptions& opts, const TrialParams& params,
              double eps, const std::string& out) {
    const TheoremId id = parse_theorem(theorem);
    GeneratedInstance inst = build_instance(opts, opts.seed);
    json cfg = instance_config_json(opts);
    cfg["theorem"] = theorem;
    cfg["eps"] = eps;
    echo_config("bound", std::move(cfg));
    const BoundResult bound = evaluate_bound(id, inst, params, eps);
    std::printf("%s: %s bound on %s at radius %.17g\n", theorem_name(bound.theorem),
                bound.direction == Direction::LowerBound ? "lower" : "upper",
                bound.target.kind == Target::MaxPolarOnCircle   ? "max|D_alpha p|"
                : bound.target.kind == Target::MaxDerivOnCircle ? "max|p'|"
                                                                : "max|p|",
                bound.target.radius);
    std::printf("  value = %.17g\n", bound.value);
    if (!out.empty()) io::save_json_file(out, io::bound_to_json(bound));
    return 0;
}

int cmd_verify(const std::string& theorem, const InstanceOptions& opts, const TrialParams& params,
               double eps, const std::string& out, const std::string& format) {
    const TheoremId id = parse_theorem(theorem);
    GeneratedInstance inst = build_instance(opts, opts.seed);
    json cfg = instance_config_json(opts);
    cfg["theorem"] = theorem;
    cfg["eps"] = eps;
    cfg["r"] = params.r;
    cfg["R"] = params.R;
    cfg["alpha_abs"] = params.abs_alpha;
    echo_config("verify", std::move(cfg));
    const VerificationRecord rec = run_trial(id, inst, params, eps);
    print_record(rec);
    if (!out.empty()) {
        if (format == "csv")
            write_text_file(out, io::csv_header() + "\n" + io::record_to_csv(rec) + "\n");
        else
            io::save_json_file(out, io::record_to_json(rec));
    }
    return verdict_exit_code(rec);
}

int cmd_tightness(const std::string& theorem, const InstanceOptions& opts,
                  const TrialParams& params, double eps, const std::string& out) {
    const TheoremId id = parse_theorem(theorem);
    GeneratedInstance inst = build_instance(opts, opts.seed);
    json cfg = instance_config_json(opts);
    cfg["theorem"] = theorem;
    cfg["eps"] = eps;
    echo_config("tightness", std::move(cfg));
    const TightnessResult t = tightness(id, inst, params, eps);
    print_record(t.record);
    std::printf("  relative gap = %.6g   certification radius = %.3g\n", t.relative_gap,
                t.certification_radius);
    if (!out.empty()) {
        json j = io::record_to_json(t.record);
        j["relative_gap"] = t.relative_gap;
        j["certification_radius"] = t.certification_radius;
        io::save_json_file(out, j);
    }
    return verdict_exit_code(t.record);
}

int cmd_campaign(const std::string& theorem, int trials, int n_max, std::uint64_t seed,
                 double eps, const std::string& out, const std::string& report_file,
                 const std::string& plot_file) {
    CampaignConfig config;
    config.theorem = parse_theorem(theorem);
    config.trials = trials;
    config.n_max = n_max;
    config.base_seed = seed;
    config.eps = eps;
    echo_config("campaign", {{"theorem", theorem},
                             {"trials", trials},
                             {"nmax", n_max},
                             {"seed", seed},
                             {"eps", eps}});
    const CampaignReport report = run_campaign(config);
    std::printf("%s: %d trials  confirmed=%d  inconclusive=%d  violation_proven=%d\n",
                theorem_name(config.theorem), report.trials, report.confirmed,
                report.inconclusive, report.violation_proven);
    std::printf("  min slack = %.6g  (seed %llu, %s)\n", report.min_slack,
                static_cast<unsigned long long>(report.min_slack_seed),
                report.min_slack_label.c_str());
    std::printf("  min/mean relative gap = %.3g / %.3g  rejection rate = %.3g  %.2fs\n",
                report.min_relative_gap, report.mean_relative_gap, report.rejection_rate,
                report.duration_seconds);

    if (!out.empty()) {
        std::string csv = io::csv_header() + "\n";
        for (const VerificationRecord& rec : report.records) csv += io::record_to_csv(rec) + "\n";
        write_text_file(out, csv);
    }
    if (!report_file.empty()) io::save_json_file(report_file, io::report_to_json(report));
    if (!plot_file.empty()) {
        std::string columns = "k,r,R,alpha_abs,slack\n";
        char buf[160];
        for (const VerificationRecord& rec : report.records) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", rec.k, rec.r,
                          rec.R, rec.abs_alpha, rec.slack);
            columns += buf;
        }
        write_text_file(plot_file, columns);
    }
    if (report.violation_proven > 0) return kExitViolation;
    if (report.inconclusive > 0) return kExitInconclusive;
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"polar-derivative inequality laboratory"};
    app.require_subcommand(1);

    InstanceOptions inst_opts;
    std::string theorem;
    std::string alpha_text = "0";
    std::string out_path, report_path, plot_path, format = "json";
    std::string kind = "max";
    double radius = 1.0;
    double eps = 1e-8;
    double r_param = 1.0, big_r_param = 1.0;
    std::optional<int> index_override;
    int count = 1;
    int trials = 100;
    int n_max = 8;
    std::string out_dir = ".";

    CLI::App* gen = app.add_subcommand("gen", "generate instances as JSON files");
    add_instance_options(gen, inst_opts);
    gen->add_option("--count", count, "number of instances (seeds seed, seed+1, ...)");
    gen->add_option("--out", out_dir, "output directory");

    std::string extrema_poly;
    CLI::App* extrema = app.add_subcommand("extrema", "certified max/min of |p| on a circle");
    extrema->add_option("--poly", extrema_poly, "polynomial JSON file")->required();
    extrema->add_option("--radius", radius, "circle radius");
    extrema->add_option("--kind", kind, "max | min");
    extrema->add_option("--eps", eps, "certification radius");
    extrema->add_option("--out", out_path, "machine-readable output file");
    extrema->add_option("--format", format, "json | csv");

    const auto add_trial_options = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--theorem", theorem, "bound to evaluate")->required();
        add_instance_options(cmd, inst_opts);
        cmd->add_option("--r", r_param, "inner circle radius");
        cmd->add_option("--R", big_r_param, "outer circle radius");
        cmd->add_option("--alpha", alpha_text, "polar point (complex, reduced to |alpha|)");
        cmd->add_option("--index", index_override, "override the lacunary index");
        cmd->add_option("--eps", eps, "certification radius");
        cmd->add_option("--out", out_path, "machine-readable output file");
        if (with_format) cmd->add_option("--format", format, "json | csv");
    };

    CLI::App* bound = app.add_subcommand("bound", "evaluate a bound's right-hand side");
    add_trial_options(bound, false);

    CLI::App* verify = app.add_subcommand("verify", "run one inequality trial");
    add_trial_options(verify, true);

    CLI::App* tight = app.add_subcommand("tightness", "equality-case relative gap");
    add_trial_options(tight, false);

    CLI::App* campaign = app.add_subcommand("campaign", "seeded randomized campaign");
    campaign->add_option("--theorem", theorem, "bound to verify")->required();
    campaign->add_option("--trials", trials, "number of trials");
    campaign->add_option("--nmax", n_max, "maximum degree");
    campaign->add_option("--seed", inst_opts.seed, "base seed");
    double campaign_eps = 1e-6;
    campaign->add_option("--eps", campaign_eps, "certification radius");
    campaign->add_option("--out", out_path, "per-trial CSV file");
    campaign->add_option("--report", report_path, "campaign report JSON file");
    campaign->add_option("--emit-plot-data", plot_path, "(parameter, slack) CSV columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    TrialParams params;
    params.r = r_param;
    params.R = big_r_param;
    params.abs_alpha = std::abs(parse_complex(alpha_text));
    params.index = index_override;

    if (gen->parsed()) return cmd_gen(inst_opts, count, out_dir);
    if (extrema->parsed()) return cmd_extrema(extrema_poly, radius, kind, eps, out_path, format);
    if (bound->parsed()) return cmd_bound(theorem, inst_opts, params, eps, out_path);
    if (verify->parsed()) return cmd_verify(theorem, inst_opts, params, eps, out_path, format);
    if (tight->parsed()) return cmd_tightness(theorem, inst_opts, params, eps, out_path);
    if (campaign->parsed())
        return cmd_campaign(theorem, trials, n_max, inst_opts.seed, campaign_eps, out_path,
                            report_path, plot_path);
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const precondition_error& e) {
        std::cerr << "refused: preconditions not satisfied\n";
        for (const Precondition& p : e.report())
            std::cerr << "  [" << (p.satisfied ? "ok" : "FAIL") << "] " << p.name << '\n';
        return kExitBadData;
    } catch (const error& e) {
        std::cerr << e.what() << '\n';
        switch (e.code()) {
            case errc::non_positive_radius:
            case errc::non_positive_tolerance:
            case errc::non_divisor:
            case errc::bad_annulus:
            case errc::bad_theorem:
            case errc::degree_zero:
                return kExitUsage;
            default:
                return kExitBadData;
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitSoftware;
    }
}
