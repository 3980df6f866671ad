#pragma once

#include "polarlab/poly.hpp"

namespace polarlab {

enum class ExtremumKind { Max, Min };

/// Certified enclosure of an extremum of |p| on the circle |z| = radius.
/// The true extremum lies in [value - error_radius, value + error_radius],
/// and |p(radius * e^{i witness_angle})| is within error_radius of value.
struct CertifiedExtremum {
    double value = 0.0;
    double error_radius = 0.0;
    double witness_angle = 0.0; // in [0, 2*pi)
    ExtremumKind kind = ExtremumKind::Max;
    double radius = 1.0;

    double lower() const noexcept { return value - error_radius; }
    double upper() const noexcept { return value + error_radius; }
};

/// L = sum_nu nu |a_nu| R^nu, a bound on |d/dtheta p(R e^{i theta})|;
/// |p| along the circle is L-Lipschitz in theta.
double circle_lipschitz_bound(const Polynomial& p, double radius);

/// Certified max of |p| on |z| = radius with error_radius <= eps.
///
/// Adaptive arc subdivision: arcs carry the Lipschitz upper bound
/// f(center) + L * halfwidth; arcs that cannot beat the best sampled value
/// are retired, the rest are split, until the enclosure width is below eps.
/// A golden-section polish improves the witness; the certificate rests only
/// on sampled values and the Lipschitz bound. Deterministic for fixed input.
/// Fails with ToleranceUnreachable past 10^8 evaluations.
CertifiedExtremum max_modulus(const Polynomial& p, double radius, double eps);

/// Certified min, same scheme. An enclosure that reaches 0 is reported
/// clamped as [0, value + error_radius].
CertifiedExtremum min_modulus(const Polynomial& p, double radius, double eps);

/// Number of zeros of p in |z| < radius via the argument principle, sampled
/// densely enough (step * L < certified min of |p| on the circle) that the
/// winding count is exact. Throws ToleranceUnreachable when |p| comes too
/// close to zero on the circle for the count to be certified.
int count_zeros_in_disk(const Polynomial& p, double radius);

} // namespace polarlab
