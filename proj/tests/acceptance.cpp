// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polarlab/verifier.hpp"

using namespace polarlab;

namespace {

struct Harness {
    int failures = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& detail) {
        if (!ok) notes.push_back(detail);
    }

    void criterion(int number, const std::string& title, const std::function<void()>& body) {
        notes.clear();
        try {
            body();
        } catch (const std::exception& e) {
            notes.push_back(std::string("exception: ") + e.what());
        }
        if (notes.empty()) {
            std::printf("[PASS] criterion %2d: %s\n", number, title.c_str());
        } else {
            ++failures;
            std::printf("[FAIL] criterion %2d: %s\n", number, title.c_str());
            for (const std::string& n : notes) std::printf("         %s\n", n.c_str());
        }
        std::fflush(stdout);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

} // namespace

int main() {
    Harness h;

    // 1. Equality (4): p = (z+0.5)^5, k = 0.5; both sides 5*1.5^4 = 25.3125
    //    within 2e-8 at eps = 1e-8, in under a second.
    h.criterion(1, "equality (4) at (z+0.5)^5, k=0.5: lhs = rhs = 25.3125 +/- 2e-8, < 1 s", [&] {
        const auto t0 = std::chrono::steady_clock::now();
        const Polynomial p = extremal_binomial(5, 0.5).poly;
        const double lhs = max_modulus(derivative(p), 1.0, 1e-8).value;
        const double max_1 = max_modulus(p, 1.0, 1e-8).value;
        const double rhs = classical_bound(TheoremId::Govil4, 5, 0.5, max_1).value;
        const double elapsed = seconds_since(t0);
        h.check(std::abs(lhs - 25.3125) <= 2e-8, fmt("lhs off by %.3g", lhs - 25.3125));
        h.check(std::abs(rhs - 25.3125) <= 2e-8, fmt("rhs off by %.3g", rhs - 25.3125));
        h.check(elapsed < 1.0, fmt("took %.2f s", elapsed));
    });

    // 2. Equality (5): p = z^5 + 2^5, k = 2; both sides 5 within 2e-8.
    h.criterion(2, "equality (5) at z^5 + 32, k=2: lhs = rhs = 5 +/- 2e-8", [&] {
        const Polynomial p = extremal_block(5, 5, 2.0, ZeroSide::ZerosInsideClosedDisk).poly;
        const double lhs = max_modulus(derivative(p), 1.0, 1e-8).value;
        const double max_1 = max_modulus(p, 1.0, 1e-8).value;
        const double rhs = classical_bound(TheoremId::Govil5, 5, 2.0, max_1).value;
        h.check(std::abs(lhs - 5.0) <= 2e-8, fmt("lhs off by %.3g", lhs - 5.0));
        h.check(std::abs(rhs - 5.0) <= 2e-8, fmt("rhs off by %.3g", rhs - 5.0));
    });

    // 3. Equality (6): p = (z+2)^4, k = 2; both sides 108 within 2e-6 relative.
    h.criterion(3, "equality (6) at (z+2)^4, k=2: lhs = rhs = 108 within 2e-6 relative", [&] {
        const Polynomial p = extremal_binomial(4, 2.0).poly;
        const double lhs = max_modulus(derivative(p), 1.0, 1e-8).value;
        const double max_1 = max_modulus(p, 1.0, 1e-8).value;
        const double rhs = classical_bound(TheoremId::Malik6, 4, 2.0, max_1).value;
        h.check(std::abs(lhs - 108.0) <= 2e-6 * 108.0, fmt("lhs off by %.3g", lhs - 108.0));
        h.check(std::abs(rhs - 108.0) <= 2e-6 * 108.0, fmt("rhs off by %.3g", rhs - 108.0));
    });

    // 4. Equality (7): p = (z^2+1)^3, mu=2, n=6, k=r=R=1; both sides 24
    //    within 2e-6 relative; min on the unit circle certified as <= eps.
    h.criterion(4, "equality (7) at (z^2+1)^3: lhs = rhs = 24 within 2e-6 relative", [&] {
        const double eps = 1e-8;
        const Polynomial p = extremal_block(6, 2, 1.0, ZeroSide::ZeroFreeOpenDisk).poly;
        const double lhs = max_modulus(derivative(p), 1.0, eps).value;
        const auto min_1 = min_modulus(p, 1.0, eps);
        const double max_1 = max_modulus(p, 1.0, eps).value;
        const double rhs =
            aziz_shah7_upper(6, 1.0, 2, 1.0, 1.0, max_1, min_1.value).value;
        h.check(min_1.value <= eps, fmt("min not certified small: %.3g", min_1.value));
        h.check(std::abs(lhs - 24.0) <= 2e-6 * 24.0, fmt("lhs off by %.3g", lhs - 24.0));
        h.check(std::abs(rhs - 24.0) <= 2e-6 * 24.0, fmt("rhs off by %.3g", rhs - 24.0));
    });

    // 5. Equality (14): p = z^4 + 16, k=2, r=1, R=1.5, alpha=3; both sides
    //    104.5 within 2e-6 relative.
    h.criterion(5, "equality (14) at z^4 + 16: lhs = rhs = 104.5 within 2e-6 relative", [&] {
        TrialParams params;
        params.r = 1.0;
        params.R = 1.5;
        params.abs_alpha = 3.0;
        const auto rec = run_trial(TheoremId::Thm2_14,
                                   extremal_block(4, 4, 2.0, ZeroSide::ZeroFreeOpenDisk),
                                   params, 1e-8);
        h.check(std::abs(rec.lhs.value - 104.5) <= 2e-6 * 104.5,
                fmt("lhs off by %.3g", rec.lhs.value - 104.5));
        h.check(std::abs(rec.rhs - 104.5) <= 2e-6 * 104.5,
                fmt("rhs off by %.3g", rec.rhs - 104.5));
    });

    // 6. Reduction identities over 100 random admissible tuples each.
    h.criterion(6, "reduction identities agree to 1e-12 relative (100 tuples each)", [&] {
        std::mt19937_64 rng(1234);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 8);
            const int mu = 1 + static_cast<int>(rng() % n);
            const double k = oracles::uniform(rng, 0.3, 1.0);
            const double abs_an = oracles::uniform(rng, 0.5, 2.0);
            const double abs_anmu = oracles::uniform(rng, 0.0, 1.5);
            const double min_k =
                oracles::uniform(rng, 0.0, 0.8) * abs_an * std::pow(k, n);
            const double max_1 = abs_an + oracles::uniform(rng, 0.1, 3.0);
            const double alpha = std::pow(k, mu) * (1.0 + 2.0 * oracles::uniform01(rng));

            const double a_plain = a_mu(n, k, mu, abs_an, abs_anmu, min_k);
            const double a_prime1 = a_mu_prime(n, k, mu, 1.0, abs_an, abs_anmu, min_k);
            worst = std::max(worst, rel_diff(a_prime1, a_plain));
            worst = std::max(
                worst,
                rel_diff(thm1_lower(n, k, mu, 1.0, 1.0, alpha, max_1, min_k, a_prime1).value,
                         thm_a_lower(n, k, mu, alpha, max_1, min_k, a_plain).value));

            const double k2 = oracles::uniform(rng, 1.0, 2.5);
            const double alpha2 = 1.0 + 2.0 * oracles::uniform01(rng);
            const double mn2 = oracles::uniform(rng, 0.0, max_1);
            worst = std::max(
                worst, rel_diff(thm2_upper(n, k2, mu, 1.0, 1.0, alpha2, max_1, mn2).value,
                                thm_b_upper(n, k2, mu, alpha2, max_1, mn2).value));

            const double r = oracles::uniform(rng, 1.0, 1.3);
            const double R = r + oracles::uniform(rng, 0.0, 0.4);
            const double min_1 = oracles::uniform(rng, 0.0, 0.8) * abs_an;
            const double alpha3 =
                (1.0 / std::pow(R, mu - 1)) * (1.0 + 2.0 * oracles::uniform01(rng));
            const double a2 = a_mu_dprime(n, R, mu, abs_an, abs_anmu, min_1);
            const double a2p = a_mu_prime(n, 1.0, mu, R, abs_an, abs_anmu, min_1);
            worst = std::max(
                worst,
                rel_diff(cor1_lower(n, mu, r, R, alpha3, max_1, min_1, a2).value,
                         thm1_lower(n, 1.0, mu, r, R, alpha3, max_1, min_1, a2p).value));
        }
        h.check(worst <= 1e-12, fmt("worst relative discrepancy %.3g", worst));
    });

    // 7. Limit identities: bound/|alpha| within 3/|alpha| of the limit form
    //    at |alpha| in {1e4, 1e6}, decreasing with |alpha|.
    h.criterion(7, "limit identities: remark 2 and remark 4 at |alpha| = 1e4, 1e6", [&] {
        std::mt19937_64 rng(4321);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 8);
            const int mu = 1 + static_cast<int>(rng() % n);
            const double k = oracles::uniform(rng, 0.3, 1.0);
            const double abs_an = oracles::uniform(rng, 0.5, 2.0);
            const double abs_anmu = oracles::uniform(rng, 0.0, 1.5);
            const double min_k =
                oracles::uniform(rng, 0.0, 0.8) * abs_an * std::pow(k, n);
            const double max_r = abs_an + oracles::uniform(rng, 0.1, 3.0);
            const double r = oracles::uniform(rng, std::max(k, 1.0), 1.3);
            const double R = r + oracles::uniform(rng, 0.0, 0.3);
            const double a_prime = a_mu_prime(n, k, mu, R, abs_an, abs_anmu, min_k);
            const double limit1 = remark2_lower(n, k, mu, r, R, max_r, min_k).value;

            const int m = 1 + static_cast<int>(rng() % std::min(n, 2));
            const double k2 = oracles::uniform(rng, 1.0, 1.4);
            const double R2 = oracles::uniform(rng, 0.95, 1.0) * k2;
            const double r2 = oracles::uniform(rng, 0.5, 1.0) * R2;
            const double mn = oracles::uniform(rng, 0.0, 0.3) * max_r;
            const double limit2 = remark4_upper(n, k2, m, r2, R2, max_r, mn).value;

            double prev1 = 1.0, prev2 = 1.0;
            for (double alpha : {1e4, 1e6}) {
                const double e1 = rel_diff(
                    thm1_lower(n, k, mu, r, R, alpha, max_r, min_k, a_prime).value / alpha,
                    limit1);
                const double e2 = rel_diff(
                    thm2_upper(n, k2, m, r2, R2, alpha, max_r, mn).value / alpha, limit2);
                h.check(e1 <= 3.0 / alpha, fmt("remark2 gap %.3g at alpha %.0e", e1, alpha));
                h.check(e2 <= 3.0 / alpha, fmt("remark4 gap %.3g at alpha %.0e", e2, alpha));
                h.check(e1 < prev1, "remark2 gap not decreasing");
                h.check(e2 < prev2, "remark4 gap not decreasing");
                prev1 = e1;
                prev2 = e2;
            }
        }
    });

    // 8. Campaigns: 500 seeded trials per theorem, eps = 1e-6, zero proven
    //    violations; Inconclusive trials resolve at eps = 1e-8 (Confirmed or
    //    consistent with equality); total under 5 minutes.
    h.criterion(8, "campaigns: 9 theorems x 500 trials, no violations, ties resolve at 1e-8",
                [&] {
                    const auto t0 = std::chrono::steady_clock::now();
                    const TheoremId theorems[] = {
                        TheoremId::AzizShah7, TheoremId::AzizShah8, TheoremId::ThmA9,
                        TheoremId::ThmB10,    TheoremId::Thm1_11,   TheoremId::Cor1_13,
                        TheoremId::Thm2_14,   TheoremId::Lemma21_15, TheoremId::Growth18};
                    for (TheoremId theorem : theorems) {
                        CampaignConfig config;
                        config.theorem = theorem;
                        config.trials = 500;
                        config.n_max = 8;
                        config.base_seed = 20240901;
                        config.eps = 1e-6;
                        const auto report = run_campaign(config);
                        h.check(report.violation_proven == 0,
                                std::string(theorem_name(theorem)) + ": " +
                                    std::to_string(report.violation_proven) +
                                    " proven violations");
                        h.check(report.confirmed + report.inconclusive +
                                        report.violation_proven ==
                                    report.trials,
                                "counts do not add up");
                        for (const VerificationRecord& rec : report.records) {
                            if (rec.verdict != Verdict::Inconclusive) continue;
                            const auto fine = run_sampled_trial(theorem, config.n_max,
                                                                rec.seed, 1e-8);
                            const bool resolved = fine.verdict == Verdict::Confirmed ||
                                                  consistent_with_equality(fine);
                            h.check(resolved, std::string(theorem_name(theorem)) + " seed " +
                                                  std::to_string(rec.seed) +
                                                  " unresolved at 1e-8");
                        }
                    }
                    const double elapsed = seconds_since(t0);
                    h.check(elapsed < 300.0, fmt("campaigns took %.1f s", elapsed));
                });

    // 9. Extrema oracle: 200 random degree <= 8 polynomials; the certified
    //    enclosure contains the 1e6-point dense estimate in 100% of cases.
    h.criterion(9, "extrema enclosures contain the 1e6-point dense estimate (200 cases)", [&] {
        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 200; ++trial) {
            const Polynomial p = oracles::random_poly(rng, 1 + static_cast<int>(rng() % 8));
            const double radius = oracles::uniform(rng, 0.4, 2.0);
            const auto kind = (trial % 2 == 0) ? ExtremumKind::Max : ExtremumKind::Min;
            const auto cert = kind == ExtremumKind::Max ? max_modulus(p, radius, 1e-6)
                                                        : min_modulus(p, radius, 1e-6);
            const double dense =
                oracles::dense_extremum(p, radius, kind == ExtremumKind::Max, 1'000'000);
            h.check(cert.lower() <= dense && dense <= cert.upper(),
                    fmt("trial enclosure [%.9g, %.9g] misses dense %.9g", cert.lower(),
                        cert.upper(), dense));
        }
    });

    // 10. Polar-derivative limit: max-norm of D_alpha p / alpha - p' over
    //     |z| = 1 scales as 1/|alpha| across two decades.
    h.criterion(10, "polar derivative: D_alpha p/alpha -> p' at rate 1/|alpha|", [&] {
        std::mt19937_64 rng(888);
        for (int trial = 0; trial < 50; ++trial) {
            const Polynomial p = oracles::random_poly(rng, 2 + static_cast<int>(rng() % 7));
            const Polynomial dp = derivative(p);
            const auto err = [&](double alpha) {
                // max over |z|=1 of |D_alpha p(z)/alpha - p'(z)|, via the
                // certified max of the explicit difference polynomial.
                const Polynomial da = polar_derivative(p, alpha);
                std::vector<Complex> diff(da.coeffs().size());
                for (std::size_t i = 0; i < diff.size(); ++i) {
                    diff[i] = da[i] / alpha;
                    if (i < dp.coeffs().size()) diff[i] -= dp[i];
                }
                return max_modulus(Polynomial(std::move(diff)), 1.0, 1e-12).value;
            };
            const double e0 = err(1.0);
            const double e2 = err(1e2);
            const double e4 = err(1e4);
            h.check(e4 <= 1.0001 * e0 / 1e4 + 1e-15, fmt("e4 %.3g vs e0 %.3g", e4, e0));
            h.check(rel_diff(e2 * 1e2, e0) <= 1e-6, fmt("two-decade drift %.3g", rel_diff(e2 * 1e2, e0)));
            h.check(rel_diff(e4 * 1e4, e0) <= 1e-6, fmt("two-decade drift %.3g", rel_diff(e4 * 1e4, e0)));
        }
    });

    std::printf("%d of 10 criteria passed\n", 10 - h.failures);
    return h.failures;
}
