#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarlab/poly.hpp"

namespace polarlab {

/// A polynomial that provably belongs to one of the constrained classes,
/// with its ground-truth zeros. Zero moduli are set at construction time, so
/// the side constraint holds with zero tolerance.
struct GeneratedInstance {
    Polynomial poly;
    std::vector<Complex> zeros;
    PolyClass poly_class;
    std::uint64_t seed = 0;
    std::string label;

    bool operator==(const GeneratedInstance& other) const = default;
};

/// (z^idx + k^idx)^(n/idx): the equality case of (7), (14) and (15). Zeros
/// are the idx-th roots of -k^idx, all of modulus exactly k, so the instance
/// is valid for either zero side; `side` picks the declared class (top
/// lacunary for zeros-inside, bottom lacunary for zero-free).
/// Throws error(errc::non_divisor) unless idx divides n.
GeneratedInstance extremal_block(int n, int idx, double k, ZeroSide side);

/// (z + k)^n: the equality case of (4) and (6). n-fold zero at -k.
GeneratedInstance extremal_binomial(int n, double k);

/// Random member of the top-lacunary class with all zeros in |z| <= k.
/// mu = 1: n zeros uniform over the closed disk (uniform in area) and a
/// random unit-modulus leading coefficient times leading_scale.
/// mu >= 2: product of n/mu blocks (z^mu + c_j) with c_j uniform over the
/// disk of radius k^mu, so a_{n-1}..a_{n-mu+1} vanish exactly and every
/// zero has modulus |c_j|^(1/mu) <= k. Deterministic for fixed seed.
GeneratedInstance random_top_lacunary(int n, int mu, double k, std::uint64_t seed,
                                      double leading_scale = 1.0);

/// Random member of the bottom-lacunary class with no zeros in |z| < k;
/// zero moduli lie in [k, k_max]. exclude_boundary draws them strictly
/// above k so the min-modulus on |z| = k is strictly positive.
GeneratedInstance random_bottom_lacunary_zerofree(int n, int m_idx, double k, double k_max,
                                                  std::uint64_t seed, double leading_scale = 1.0,
                                                  bool exclude_boundary = false);

/// Wraps a user-supplied polynomial (no ground-truth zeros; class checks on
/// it fall back to numerical certification).
GeneratedInstance instance_from_poly(Polynomial p, PolyClass poly_class, std::string label);

} // namespace polarlab
