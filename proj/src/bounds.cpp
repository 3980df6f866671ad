#include "polarlab/bounds.hpp"

#include <cmath>

namespace polarlab {

namespace {

class PreconditionChecker {
  public:
    void require(const std::string& name, bool ok) {
        report_.push_back({name, ok});
        all_ok_ = all_ok_ && ok;
    }

    PreconditionReport finish() {
        if (!all_ok_) throw precondition_error(std::move(report_));
        return std::move(report_);
    }

  private:
    PreconditionReport report_;
    bool all_ok_ = true;
};

void check_index(PreconditionChecker& pre, int n, int idx, const char* label) {
    pre.require(std::string(label) + " in [1, n]", idx >= 1 && idx <= n);
    pre.require("degree n >= 1", n >= 1);
}

double ratio_pow(double num_base, double den_base, double exponent) {
    return std::pow(num_base / den_base, exponent);
}

} // namespace

// The three ratios are deliberately written out from their own displays, not
// delegated to one another: the R = 1 and k = 1 reductions are verified as
// cross-checks and must compare two genuinely distinct evaluation routes.

double a_mu(int n, double k, int mu, double abs_an, double abs_anmu, double m_min) {
    PreconditionChecker pre;
    check_index(pre, n, mu, "mu");
    pre.require("k > 0", k > 0.0);
    pre.finish();
    const double bracket = abs_an - m_min / std::pow(k, n);
    const double num = n * bracket * std::pow(k, 2 * mu) + mu * abs_anmu * std::pow(k, mu - 1);
    const double den = n * bracket * std::pow(k, mu - 1) + mu * abs_anmu;
    if (!(den > 0.0))
        throw error(errc::degenerate_denominator,
                    "n(|a_n| - m/k^n)k^(mu-1) + mu|a_(n-mu)| must be positive");
    return num / den;
}

double a_mu_prime(int n, double k, int mu, double R, double abs_an, double abs_anmu,
                  double m_min) {
    PreconditionChecker pre;
    check_index(pre, n, mu, "mu");
    pre.require("k > 0", k > 0.0);
    pre.require("R > 0", R > 0.0);
    pre.finish();
    const double bracket = abs_an - m_min / std::pow(k, n);
    const double num = n * bracket * std::pow(k, 2 * mu) / std::pow(R, mu) +
                       mu * abs_anmu * std::pow(k, mu - 1) / std::pow(R, mu - 1);
    const double den = n * R * bracket * std::pow(k, mu - 1) + mu * abs_anmu;
    if (!(den > 0.0))
        throw error(errc::degenerate_denominator,
                    "n R(|a_n| - m/k^n)k^(mu-1) + mu|a_(n-mu)| must be positive");
    return num / den;
}

double a_mu_dprime(int n, double R, int mu, double abs_an, double abs_anmu, double m_min) {
    PreconditionChecker pre;
    check_index(pre, n, mu, "mu");
    pre.require("R > 0", R > 0.0);
    pre.finish();
    const double bracket = abs_an - m_min;
    const double num =
        n / std::pow(R, mu) * bracket + mu / std::pow(R, mu - 1) * abs_anmu;
    const double den = n * R * bracket + mu * abs_anmu;
    if (!(den > 0.0))
        throw error(errc::degenerate_denominator,
                    "n R(|a_n| - m) + mu|a_(n-mu)| must be positive");
    return num / den;
}

BoundResult classical_bound(TheoremId which, int n, double k, double max_on_unit) {
    PreconditionChecker pre;
    pre.require("degree n >= 1", n >= 1);
    double value = 0.0;
    Direction dir = Direction::UpperBound;
    switch (which) {
        case TheoremId::Bernstein1:
            value = n * max_on_unit;
            dir = Direction::UpperBound;
            break;
        case TheoremId::ErdosLax2:
            value = 0.5 * n * max_on_unit;
            dir = Direction::UpperBound;
            break;
        case TheoremId::Turan3:
            value = 0.5 * n * max_on_unit;
            dir = Direction::LowerBound;
            break;
        case TheoremId::Govil4:
            pre.require("k <= 1", k <= 1.0);
            pre.require("k > 0", k > 0.0);
            value = n / (1.0 + k) * max_on_unit;
            dir = Direction::LowerBound;
            break;
        case TheoremId::Govil5:
            pre.require("k >= 1", k >= 1.0);
            value = n / (1.0 + std::pow(k, n)) * max_on_unit;
            dir = Direction::LowerBound;
            break;
        case TheoremId::Malik6:
            pre.require("k >= 1", k >= 1.0);
            value = n / (1.0 + k) * max_on_unit;
            dir = Direction::UpperBound;
            break;
        default:
            throw error(errc::bad_theorem, "not a classical unit-circle derivative bound");
    }
    return {which, dir, {Target::MaxDerivOnCircle, 1.0}, value, pre.finish()};
}

BoundResult aziz_shah7_upper(int n, double k, int mu, double r, double R, double max_r,
                             double min_k) {
    PreconditionChecker pre;
    check_index(pre, n, mu, "mu");
    pre.require("k > 0", k > 0.0);
    pre.require("0 < r", r > 0.0);
    pre.require("r <= R", r <= R);
    pre.require("R <= k", R <= k);
    PreconditionReport report = pre.finish();

    const double nm = static_cast<double>(n) / mu;
    const double value = n * std::pow(R, mu - 1) * std::pow(std::pow(R, mu) + std::pow(k, mu),
                                                            nm - 1.0) /
                         std::pow(std::pow(r, mu) + std::pow(k, mu), nm) * (max_r - min_k);
    return {TheoremId::AzizShah7, Direction::UpperBound, {Target::MaxDerivOnCircle, R}, value,
            std::move(report)};
}

BoundResult aziz_shah8_lower(int n, double k, int mu, double max_1, double min_k) {
    PreconditionChecker pre;
    check_index(pre, n, mu, "mu");
    pre.require("k > 0", k > 0.0);
    pre.require("k <= 1", k <= 1.0);
    PreconditionReport report = pre.finish();

    const double value =
        n / (1.0 + std::pow(k, mu)) * (max_1 + min_k / std::pow(k, n - mu));
    return {TheoremId::AzizShah8, Direction::LowerBound, {Target::MaxDerivOnCircle, 1.0}, value,
            std::move(report)};
}

BoundResult thm_a_lower(int n, double k, int mu, double abs_alpha, double max_1, double min_k,
                        double a_mu_value) {
    PreconditionChecker pre;
    check_index(pre, n, mu, "mu");
    pre.require("k > 0", k > 0.0);
    pre.require("k <= 1", k <= 1.0);
    pre.require("|alpha| >= k^mu", abs_alpha >= std::pow(k, mu));
    PreconditionReport report = pre.finish();

    const double kmu = std::pow(k, mu);
    const double one_kmu = 1.0 + kmu;
    const double value = n * (abs_alpha - kmu) / one_kmu * max_1 +
                         n * (abs_alpha + 1.0) / (std::pow(k, n - mu) * one_kmu) * min_k +
                         n * (kmu - a_mu_value) / one_kmu * max_1 +
                         n * (a_mu_value - kmu) / (std::pow(k, n) * one_kmu) * min_k;
    return {TheoremId::ThmA9, Direction::LowerBound, {Target::MaxPolarOnCircle, 1.0}, value,
            std::move(report)};
}

BoundResult thm_b_upper(int n, double k, int mu, double abs_alpha, double max_1, double min_k) {
    PreconditionChecker pre;
    check_index(pre, n, mu, "mu");
    pre.require("k >= 1", k >= 1.0);
    pre.require("|alpha| >= 1", abs_alpha >= 1.0);
    PreconditionReport report = pre.finish();

    const double kmu = std::pow(k, mu);
    const double value =
        n / (1.0 + kmu) * ((abs_alpha + kmu) * max_1 - (abs_alpha - 1.0) * min_k);
    return {TheoremId::ThmB10, Direction::UpperBound, {Target::MaxPolarOnCircle, 1.0}, value,
            std::move(report)};
}

namespace {

// Shared body of (11): the statement form uses min_{|z|=k} in the fifth term,
// the proof-display variant min_{|z|=R}.
BoundResult thm1_impl(TheoremId id, int n, double k, int mu, double r, double R,
                      double abs_alpha, double max_r, double min_k, double fifth_term_min,
                      double a_prime) {
    PreconditionChecker pre;
    check_index(pre, n, mu, "mu");
    pre.require("k > 0", k > 0.0);
    pre.require("k <= 1", k <= 1.0);
    pre.require("0 < r", r > 0.0);
    pre.require("r <= R", r <= R);
    pre.require("r R >= k^2", r * R >= k * k);
    pre.require("|alpha| >= k^mu / R^(mu-1)",
                abs_alpha >= std::pow(k, mu) / std::pow(R, mu - 1));
    PreconditionReport report = pre.finish();

    const double kmu = std::pow(k, mu);
    const double rmu_k = std::pow(r, mu) + kmu;
    const double rmu_R = std::pow(R, mu) + kmu;
    const double nm = static_cast<double>(n) / mu;
    const double growth = std::pow(rmu_R, nm - 1.0) / std::pow(rmu_k, nm);
    const double rpow = std::pow(R, mu - 1);

    const double value =
        n * (rpow * abs_alpha - kmu) * growth * max_r +
        n * (rpow * abs_alpha + std::pow(R, mu)) / (std::pow(k, n - mu) * rmu_R) * min_k +
        n * (kmu - std::pow(R, mu) * a_prime) * growth * max_r +
        n * std::pow(R, n) * (std::pow(R, mu) * a_prime - kmu) / (std::pow(k, n) * rmu_R) *
            min_k +
        n * rpow / rmu_R * (abs_alpha - R * a_prime) *
            (std::pow(R / r, n) - ratio_pow(rmu_R, rmu_k, nm)) * fifth_term_min;
    return {id, Direction::LowerBound, {Target::MaxPolarOnCircle, R}, value, std::move(report)};
}

} // namespace

BoundResult thm1_lower(int n, double k, int mu, double r, double R, double abs_alpha,
                       double max_r, double min_k, double a_mu_prime_value) {
    return thm1_impl(TheoremId::Thm1_11, n, k, mu, r, R, abs_alpha, max_r, min_k, min_k,
                     a_mu_prime_value);
}

BoundResult thm1_lower_min_at_R(int n, double k, int mu, double r, double R, double abs_alpha,
                                double max_r, double min_k, double min_R,
                                double a_mu_prime_value) {
    return thm1_impl(TheoremId::Thm1_11, n, k, mu, r, R, abs_alpha, max_r, min_k, min_R,
                     a_mu_prime_value);
}

BoundResult remark2_lower(int n, double k, int mu, double r, double R, double max_r,
                          double min_k) {
    PreconditionChecker pre;
    check_index(pre, n, mu, "mu");
    pre.require("k > 0", k > 0.0);
    pre.require("k <= 1", k <= 1.0);
    pre.require("0 < r", r > 0.0);
    pre.require("r <= R", r <= R);
    pre.require("r R >= k^2", r * R >= k * k);
    PreconditionReport report = pre.finish();

    const double kmu = std::pow(k, mu);
    const double rmu_k = std::pow(r, mu) + kmu;
    const double rmu_R = std::pow(R, mu) + kmu;
    const double nm = static_cast<double>(n) / mu;
    const double rpow = std::pow(R, mu - 1);

    const double value =
        n * rpow * std::pow(rmu_R, nm - 1.0) / std::pow(rmu_k, nm) * max_r +
        n * rpow / (std::pow(k, n - mu) * rmu_R) * min_k +
        n * rpow / rmu_R * (std::pow(R / r, n) - ratio_pow(rmu_R, rmu_k, nm)) * min_k;
    return {TheoremId::Remark2_12, Direction::LowerBound, {Target::MaxDerivOnCircle, R}, value,
            std::move(report)};
}

BoundResult cor1_lower(int n, int mu, double r, double R, double abs_alpha, double max_r,
                       double min_1, double a_mu_dprime_value) {
    PreconditionChecker pre;
    check_index(pre, n, mu, "mu");
    pre.require("0 < r", r > 0.0);
    pre.require("r <= R", r <= R);
    pre.require("r R >= 1", r * R >= 1.0);
    pre.require("|alpha| >= 1 / R^(mu-1)", abs_alpha >= 1.0 / std::pow(R, mu - 1));
    PreconditionReport report = pre.finish();

    // The k = 1 display of (11), written out on its own so the
    // cor1 == thm1(k=1) reduction compares two distinct evaluation routes.
    const double rmu_1 = std::pow(r, mu) + 1.0;
    const double rmu_R = std::pow(R, mu) + 1.0;
    const double nm = static_cast<double>(n) / mu;
    const double growth = std::pow(rmu_R, nm - 1.0) / std::pow(rmu_1, nm);
    const double rpow = std::pow(R, mu - 1);
    const double a2 = a_mu_dprime_value;

    const double value =
        n * (rpow * abs_alpha + std::pow(R, mu)) / rmu_R * min_1 +
        n * (rpow * abs_alpha - 1.0) * growth * max_r +
        n * (1.0 - std::pow(R, mu) * a2) * growth * max_r +
        n * std::pow(R, n) * (std::pow(R, mu) * a2 - 1.0) / rmu_R * min_1 +
        n * rpow / rmu_R * (abs_alpha - R * a2) *
            (std::pow(R / r, n) - ratio_pow(rmu_R, rmu_1, nm)) * min_1;
    return {TheoremId::Cor1_13, Direction::LowerBound, {Target::MaxPolarOnCircle, R}, value,
            std::move(report)};
}

BoundResult thm2_upper(int n, double k, int m_idx, double r, double R, double abs_alpha,
                       double max_r, double min_k) {
    PreconditionChecker pre;
    check_index(pre, n, m_idx, "m");
    pre.require("k >= 1", k >= 1.0);
    pre.require("0 <= r", r >= 0.0);
    pre.require("r <= R", r <= R);
    pre.require("R <= k", R <= k);
    pre.require("R > 0", R > 0.0);
    pre.require("|alpha| >= R", abs_alpha >= R);
    PreconditionReport report = pre.finish();

    const double km = std::pow(k, m_idx);
    const double rm_k = std::pow(r, m_idx) + km;
    const double rm_R = std::pow(R, m_idx) + km;
    const double q = ratio_pow(rm_R, rm_k, static_cast<double>(n) / m_idx);
    const double rpow = std::pow(R, m_idx - 1);

    const double value = n * (rpow * abs_alpha + km) / rm_R *
                             (q * max_r - (q - 1.0) * min_k) -
                         n * (rpow * abs_alpha - std::pow(R, m_idx)) / rm_R * min_k;
    return {TheoremId::Thm2_14, Direction::UpperBound, {Target::MaxPolarOnCircle, R}, value,
            std::move(report)};
}

BoundResult remark4_upper(int n, double k, int m_idx, double r, double R, double max_r,
                          double min_k) {
    PreconditionChecker pre;
    check_index(pre, n, m_idx, "m");
    pre.require("k >= 1", k >= 1.0);
    pre.require("0 <= r", r >= 0.0);
    pre.require("r <= R", r <= R);
    pre.require("R <= k", R <= k);
    pre.require("R > 0", R > 0.0);
    PreconditionReport report = pre.finish();

    const double km = std::pow(k, m_idx);
    const double nm = static_cast<double>(n) / m_idx;
    const double value = n * std::pow(R, m_idx - 1) *
                         std::pow(std::pow(R, m_idx) + km, nm - 1.0) /
                         std::pow(std::pow(r, m_idx) + km, nm) * (max_r - min_k);
    return {TheoremId::Remark4, Direction::UpperBound, {Target::MaxDerivOnCircle, R}, value,
            std::move(report)};
}

BoundResult lemma21_growth_lower(int n, double k, int m_idx, double r, double R, double max_R,
                                 double min_k) {
    PreconditionChecker pre;
    check_index(pre, n, m_idx, "m");
    pre.require("k > 0", k > 0.0);
    pre.require("0 <= r", r >= 0.0);
    pre.require("r <= R", r <= R);
    pre.require("R <= k", R <= k);
    PreconditionReport report = pre.finish();

    const double km = std::pow(k, m_idx);
    const double ratio = ratio_pow(std::pow(r, m_idx) + km, std::pow(R, m_idx) + km,
                                   static_cast<double>(n) / m_idx);
    const double value = ratio * max_R + (1.0 - ratio) * min_k;
    return {TheoremId::Lemma21_15, Direction::LowerBound, {Target::MaxModulusOnCircle, r}, value,
            std::move(report)};
}

BoundResult growth18_lower(int n, double k, int mu, double r, double R, double max_r,
                           double min_k) {
    PreconditionChecker pre;
    check_index(pre, n, mu, "mu");
    pre.require("k > 0", k > 0.0);
    pre.require("0 < r", r > 0.0);
    pre.require("r <= R", r <= R);
    PreconditionReport report = pre.finish();

    const double kmu = std::pow(k, mu);
    const double ratio = ratio_pow(std::pow(R, mu) + kmu, std::pow(r, mu) + kmu,
                                   static_cast<double>(n) / mu);
    const double value = ratio * max_r + (std::pow(R / r, n) - ratio) * min_k;
    return {TheoremId::Growth18, Direction::LowerBound, {Target::MaxModulusOnCircle, R}, value,
            std::move(report)};
}

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::Bernstein1: return "bernstein1";
        case TheoremId::ErdosLax2: return "erdoslax2";
        case TheoremId::Turan3: return "turan3";
        case TheoremId::Govil4: return "govil4";
        case TheoremId::Govil5: return "govil5";
        case TheoremId::Malik6: return "malik6";
        case TheoremId::AzizShah7: return "azizshah7";
        case TheoremId::AzizShah8: return "azizshah8";
        case TheoremId::ThmA9: return "thma9";
        case TheoremId::ThmB10: return "thmb10";
        case TheoremId::Thm1_11: return "thm1";
        case TheoremId::Remark2_12: return "remark2";
        case TheoremId::Cor1_13: return "cor1";
        case TheoremId::Thm2_14: return "thm2";
        case TheoremId::Remark4: return "remark4";
        case TheoremId::Lemma21_15: return "lemma21";
        case TheoremId::Growth18: return "growth18";
    }
    return "unknown";
}

TheoremId parse_theorem(const std::string& name) {
    for (TheoremId id :
         {TheoremId::Bernstein1, TheoremId::ErdosLax2, TheoremId::Turan3, TheoremId::Govil4,
          TheoremId::Govil5, TheoremId::Malik6, TheoremId::AzizShah7, TheoremId::AzizShah8,
          TheoremId::ThmA9, TheoremId::ThmB10, TheoremId::Thm1_11, TheoremId::Remark2_12,
          TheoremId::Cor1_13, TheoremId::Thm2_14, TheoremId::Remark4, TheoremId::Lemma21_15,
          TheoremId::Growth18}) {
        if (name == theorem_name(id)) return id;
    }
    throw error(errc::bad_theorem, "unknown theorem id '" + name + "'");
}

Direction theorem_direction(TheoremId id) {
    switch (id) {
        case TheoremId::Bernstein1:
        case TheoremId::ErdosLax2:
        case TheoremId::Malik6:
        case TheoremId::AzizShah7:
        case TheoremId::ThmB10:
        case TheoremId::Thm2_14:
        case TheoremId::Remark4:
            return Direction::UpperBound;
        default:
            return Direction::LowerBound;
    }
}

} // namespace polarlab
