#pragma once

#include <string>

#include "polarlab/errors.hpp"

namespace polarlab {

/// Identifiers for every bound the library evaluates. The trailing number is
/// the catalog position used in reports and on the CLI.
enum class TheoremId {
    Bernstein1,
    ErdosLax2,
    Turan3,
    Govil4,
    Govil5,
    Malik6,
    AzizShah7,
    AzizShah8,
    ThmA9,
    ThmB10,
    Thm1_11,
    Remark2_12,
    Cor1_13,
    Thm2_14,
    Remark4,
    Lemma21_15,
    Growth18,
};

enum class Direction { LowerBound, UpperBound };

/// Which circle quantity a bound constrains.
struct Target {
    enum Kind { MaxPolarOnCircle, MaxDerivOnCircle, MaxModulusOnCircle } kind;
    double radius;
};

/// An evaluated right-hand side. If any precondition had failed the evaluator
/// would have refused (precondition_error) and no BoundResult would exist, so
/// `preconditions` here is always all-satisfied.
struct BoundResult {
    TheoremId theorem;
    Direction direction;
    Target target;
    double value = 0.0;
    PreconditionReport preconditions;
};

/// The three coefficient-dependent correction ratios of the refined lower
/// bounds; each is a_mu-style ratio of two positive quantities.
struct AQuantities {
    double a_mu = 0.0;
    double a_mu_prime = 0.0;
    double a_mu_dprime = 0.0;
};

// Correction ratios. All take |a_n|, |a_{n-mu}| and the certified min-modulus
// m_min as non-negative reals and throw error(errc::degenerate_denominator)
// when the denominator is not positive.
double a_mu(int n, double k, int mu, double abs_an, double abs_anmu, double m_min);
double a_mu_prime(int n, double k, int mu, double R, double abs_an, double abs_anmu,
                  double m_min);
double a_mu_dprime(int n, double R, int mu, double abs_an, double abs_anmu, double m_min);

/// Classical derivative bounds on the unit circle (catalog entries 1-6).
/// max_on_unit is max_{|z|=1} |p|. k is ignored where a bound has no k.
BoundResult classical_bound(TheoremId which, int n, double k, double max_on_unit);

/// (7): upper bound on max_{|z|=R} |p'| for a bottom-lacunary polynomial with
/// no zeros in |z| < k, 0 < r <= R <= k.
BoundResult aziz_shah7_upper(int n, double k, int mu, double r, double R, double max_r,
                             double min_k);

/// (8): lower bound on max_{|z|=1} |p'| for a top-lacunary polynomial with
/// all zeros in |z| <= k <= 1.
BoundResult aziz_shah8_lower(int n, double k, int mu, double max_1, double min_k);

/// (9), four-term reading: lower bound on max_{|z|=1} |D_alpha p|.
BoundResult thm_a_lower(int n, double k, int mu, double abs_alpha, double max_1, double min_k,
                        double a_mu_value);

/// (10): upper bound on max_{|z|=1} |D_alpha p| for bottom-lacunary
/// zero-free polynomials, k >= 1, |alpha| >= 1.
BoundResult thm_b_upper(int n, double k, int mu, double abs_alpha, double max_1, double min_k);

/// (11), five-term sum: lower bound on max_{|z|=R} |D_alpha p|.
BoundResult thm1_lower(int n, double k, int mu, double r, double R, double abs_alpha,
                       double max_r, double min_k, double a_mu_prime_value);

/// (11) with the fifth term taking min_{|z|=R} |p| instead of min_{|z|=k};
/// comparison variant only (the statement form above is the implemented one).
BoundResult thm1_lower_min_at_R(int n, double k, int mu, double r, double R, double abs_alpha,
                                double max_r, double min_k, double min_R,
                                double a_mu_prime_value);

/// (12): the |alpha| -> infinity limit of (11); lower bound on max_{|z|=R} |p'|.
BoundResult remark2_lower(int n, double k, int mu, double r, double R, double max_r,
                          double min_k);

/// (13): (11) at k = 1 with A'' in place of A'; min_1 = min_{|z|=1} |p|.
BoundResult cor1_lower(int n, int mu, double r, double R, double abs_alpha, double max_r,
                       double min_1, double a_mu_dprime_value);

/// (14): upper bound on max_{|z|=R} |D_alpha p| for bottom-lacunary
/// zero-free polynomials, k >= 1, 0 <= r <= R <= k, |alpha| >= R.
BoundResult thm2_upper(int n, double k, int m_idx, double r, double R, double abs_alpha,
                       double max_r, double min_k);

/// The |alpha| -> infinity limit of (14); upper bound on max_{|z|=R} |p'|.
BoundResult remark4_upper(int n, double k, int m_idx, double r, double R, double max_r,
                          double min_k);

/// (15): lower bound on max_{|z|=r} |p| from max_{|z|=R} |p|, 0 <= r <= R <= k.
BoundResult lemma21_growth_lower(int n, double k, int m_idx, double r, double R, double max_R,
                                 double min_k);

/// (18): lower bound on max_{|z|=R} |p| from max_{|z|=r} |p| for top-lacunary
/// polynomials with zeros in |z| <= k, 0 < r <= R.
BoundResult growth18_lower(int n, double k, int mu, double r, double R, double max_r,
                           double min_k);

const char* theorem_name(TheoremId id);
TheoremId parse_theorem(const std::string& name);
Direction theorem_direction(TheoremId id);

} // namespace polarlab
