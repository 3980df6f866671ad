#include "polarlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace polarlab::io {

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw error(errc::bad_file, "complex value must be [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

json poly_to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (const Complex& c : p.coeffs()) coeffs.push_back(complex_to_json(c));
    return json{{"coeffs", std::move(coeffs)}};
}

Polynomial poly_from_json(const json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
        throw error(errc::bad_file, "polynomial needs a non-empty coeffs array");
    std::vector<Complex> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (const json& c : j["coeffs"]) coeffs.push_back(complex_from_json(c));
    return Polynomial(std::move(coeffs));
}

json instance_to_json(const GeneratedInstance& inst) {
    json j = poly_to_json(inst.poly);
    json zeros = json::array();
    for (const Complex& w : inst.zeros) zeros.push_back(complex_to_json(w));
    j["zeros"] = std::move(zeros);
    j["class"] = {
        {"kind", inst.poly_class.kind == LacunaryKind::TopLacunary ? "top" : "bottom"},
        {"index", inst.poly_class.index},
        {"k", inst.poly_class.k},
        {"side",
         inst.poly_class.side == ZeroSide::ZerosInsideClosedDisk ? "inside" : "zerofree"},
    };
    j["seed"] = inst.seed;
    j["label"] = inst.label;
    return j;
}

GeneratedInstance instance_from_json(const json& j) {
    GeneratedInstance inst;
    inst.poly = poly_from_json(j);
    if (j.contains("zeros"))
        for (const json& w : j["zeros"]) inst.zeros.push_back(complex_from_json(w));
    if (j.contains("class")) {
        const json& c = j["class"];
        const std::string kind = c.value("kind", "top");
        const std::string side = c.value("side", "inside");
        if (kind != "top" && kind != "bottom")
            throw error(errc::bad_file, "class.kind must be top or bottom");
        if (side != "inside" && side != "zerofree")
            throw error(errc::bad_file, "class.side must be inside or zerofree");
        inst.poly_class.kind =
            kind == "top" ? LacunaryKind::TopLacunary : LacunaryKind::BottomLacunary;
        inst.poly_class.side =
            side == "inside" ? ZeroSide::ZerosInsideClosedDisk : ZeroSide::ZeroFreeOpenDisk;
        inst.poly_class.index = c.value("index", 1);
        inst.poly_class.k = c.value("k", 1.0);
    }
    inst.seed = j.value("seed", std::uint64_t{0});
    inst.label = j.value("label", std::string{});
    return inst;
}

GeneratedInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw error(errc::bad_file, path + ": " + e.what());
    }
    GeneratedInstance inst = instance_from_json(j);
    if (inst.label.empty()) inst.label = path;
    return inst;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::ios_base::failure("write to " + path + " failed");
}

json extremum_to_json(const CertifiedExtremum& e) {
    return {
        {"value", e.value},
        {"error_radius", e.error_radius},
        {"witness_angle", e.witness_angle},
        {"kind", e.kind == ExtremumKind::Max ? "max" : "min"},
        {"radius", e.radius},
    };
}

json bound_to_json(const BoundResult& b) {
    json pre = json::array();
    for (const Precondition& p : b.preconditions)
        pre.push_back({{"name", p.name}, {"satisfied", p.satisfied}});
    const char* target = b.target.kind == Target::MaxPolarOnCircle   ? "max|D_alpha p|"
                         : b.target.kind == Target::MaxDerivOnCircle ? "max|p'|"
                                                                     : "max|p|";
    return {
        {"theorem", theorem_name(b.theorem)},
        {"direction", b.direction == Direction::LowerBound ? "lower" : "upper"},
        {"target", target},
        {"target_radius", b.target.radius},
        {"value", b.value},
        {"preconditions", std::move(pre)},
    };
}

json record_to_json(const VerificationRecord& r) {
    return {
        {"theorem", theorem_name(r.theorem)},
        {"label", r.label},
        {"seed", r.seed},
        {"n", r.n},
        {"mu_or_m", r.index},
        {"k", r.k},
        {"r", r.r},
        {"R", r.R},
        {"alpha_abs", r.abs_alpha},
        {"lhs", extremum_to_json(r.lhs)},
        {"rhs", r.rhs},
        {"slack", r.slack},
        {"verdict", verdict_name(r.verdict)},
    };
}

json report_to_json(const CampaignReport& r) {
    return {
        {"theorem", theorem_name(r.config.theorem)},
        {"trials", r.trials},
        {"base_seed", r.config.base_seed},
        {"n_max", r.config.n_max},
        {"eps", r.config.eps},
        {"confirmed", r.confirmed},
        {"inconclusive", r.inconclusive},
        {"violation_proven", r.violation_proven},
        {"min_slack", r.min_slack},
        {"min_slack_seed", r.min_slack_seed},
        {"min_slack_label", r.min_slack_label},
        {"min_relative_gap", r.min_relative_gap},
        {"mean_relative_gap", r.mean_relative_gap},
        {"rejection_rate", r.rejection_rate},
        {"duration_seconds", r.duration_seconds},
    };
}

std::string csv_header() {
    return "theorem_id,seed,n,mu_or_m,k,r,R,alpha_abs,lhs,lhs_eps,rhs,slack,verdict";
}

std::string record_to_csv(const VerificationRecord& r) {
    std::ostringstream out;
    out << theorem_name(r.theorem) << ',' << r.seed << ',' << r.n << ',' << r.index << ','
        << fmt17(r.k) << ',' << fmt17(r.r) << ',' << fmt17(r.R) << ',' << fmt17(r.abs_alpha)
        << ',' << fmt17(r.lhs.value) << ',' << fmt17(r.lhs.error_radius) << ',' << fmt17(r.rhs)
        << ',' << fmt17(r.slack) << ',' << verdict_name(r.verdict);
    return out.str();
}

} // namespace polarlab::io
