#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarlab/bounds.hpp"
#include "polarlab/ensembles.hpp"
#include "polarlab/extrema.hpp"

namespace polarlab {

enum class Verdict { Confirmed, Inconclusive, ViolationProven };

const char* verdict_name(Verdict v);

/// Scalar parameters of one trial. Unused fields are ignored by theorems
/// that do not take them; the lacunary index defaults to the instance's.
struct TrialParams {
    double r = 1.0;
    double R = 1.0;
    double abs_alpha = 0.0;
    std::optional<int> index;
};

/// One executed inequality check. lhs / rhs / slack are on the scale of the
/// input polynomial; slack is lhs - rhs for lower bounds and rhs - lhs for
/// upper bounds, and the verdict compares slack against the certification
/// radius of the lhs:
///   Confirmed        slack >= +eps_cert
///   ViolationProven  slack <= -eps_cert
///   Inconclusive     otherwise
struct VerificationRecord {
    TheoremId theorem = TheoremId::Bernstein1;
    std::string label;
    std::uint64_t seed = 0;
    int n = 0;
    int index = 1; // mu or m_idx actually used
    double k = 1.0;
    double r = 1.0;
    double R = 1.0;
    double abs_alpha = 0.0;
    CertifiedExtremum lhs;
    double rhs = 0.0;
    double slack = 0.0;
    Verdict verdict = Verdict::Inconclusive;
};

/// Runs one inequality on one instance. Class preconditions (lacunarity,
/// zero side, exact degree) are checked against the instance's ground-truth
/// zeros, or certified numerically (winding number) when the instance
/// carries none; scalar preconditions are checked by the bound evaluator.
/// Refusal is a precondition_error carrying the full report, never a verdict.
///
/// Internally the polynomial is normalized to unit coefficient scale on the
/// largest circle used, extrema are computed at tolerance eps on that scale,
/// and all reported quantities are scaled back, so eps acts relative to the
/// instance's natural magnitude.
VerificationRecord run_trial(TheoremId theorem, const GeneratedInstance& instance,
                             const TrialParams& params, double eps);

/// Just the right-hand side for an instance, on the instance's scale; class
/// preconditions are checked exactly as in run_trial.
BoundResult evaluate_bound(TheoremId theorem, const GeneratedInstance& instance,
                           const TrialParams& params, double eps);

struct CampaignConfig {
    TheoremId theorem = TheoremId::Bernstein1;
    int trials = 100;
    int n_max = 8;
    std::uint64_t base_seed = 0;
    double eps = 1e-6;
    bool keep_records = true;
};

struct CampaignReport {
    CampaignConfig config;
    int trials = 0;
    int confirmed = 0;
    int inconclusive = 0;
    int violation_proven = 0;
    double min_slack = 0.0;
    std::uint64_t min_slack_seed = 0;
    std::string min_slack_label;
    double min_relative_gap = 0.0;  // |slack| / max(lhs, rhs), over trials
    double mean_relative_gap = 0.0;
    double rejection_rate = 0.0; // parameter-box rejection sampling, where used
    double duration_seconds = 0.0;
    std::vector<VerificationRecord> records; // empty unless keep_records
};

/// Seeded campaign: trial i uses seed base_seed + i for both the instance
/// and the admissible-parameter draw. Deterministic for a fixed config;
/// trials may run on up to POLARLAB_THREADS threads.
CampaignReport run_campaign(const CampaignConfig& config);

/// One campaign trial by its seed, at an arbitrary eps; the instance and
/// parameter draw are deterministic in (theorem, n_max, seed), so this
/// reproduces or refines any recorded trial.
VerificationRecord run_sampled_trial(TheoremId theorem, int n_max, std::uint64_t seed,
                                     double eps);

struct TightnessResult {
    double relative_gap = 0.0;        // |lhs - rhs| / max(lhs, rhs)
    double certification_radius = 0.0;
    VerificationRecord record;
};

/// Equality-case sharpness: relative gap between the certified lhs and the
/// bound, with the certification radius reported alongside.
TightnessResult tightness(TheoremId theorem, const GeneratedInstance& instance,
                          const TrialParams& params, double eps);

/// |slack| <= 2 * certification radius: as close to equality as a certified
/// float computation can attest.
bool consistent_with_equality(const VerificationRecord& record);

} // namespace polarlab
