#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "polarlab/errors.hpp"

namespace polarlab {

using Complex = std::complex<double>;

/// Dense complex polynomial, coefficients in ascending powers:
/// p(z) = coeffs[0] + coeffs[1] z + ... + coeffs[n] z^n.
///
/// The coefficient vector is never empty; degree() == coeffs().size() - 1.
/// A leading coefficient of zero is representable (e.g. the derivative of a
/// constant) but such polynomials are rejected by the bound evaluators.
class Polynomial {
  public:
    Polynomial() : coeffs_{Complex(0.0)} {} // the zero constant
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs);

    static Polynomial constant(Complex c) { return Polynomial({c}); }
    static Polynomial monomial(int degree, Complex leading = 1.0);

    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Complex leading() const noexcept { return coeffs_.back(); }
    Complex operator[](std::size_t i) const noexcept { return coeffs_[i]; }

    /// Largest coefficient magnitude; the reference scale for tolerances.
    double max_coeff_abs() const noexcept;

    bool operator==(const Polynomial& other) const noexcept = default;

  private:
    std::vector<Complex> coeffs_;
};

/// Horner evaluation of p at z.
Complex eval(const Polynomial& p, Complex z);

/// p'(z); the derivative of a constant is the zero constant.
Polynomial derivative(const Polynomial& p);

/// Polar derivative n p(z) + (alpha - z) p'(z) with respect to alpha.
/// Degree drops to n-1 (the z^n coefficient cancels identically).
/// Throws error(errc::degree_zero) for constants.
Polynomial polar_derivative(const Polynomial& p, Complex alpha);

/// q(z) = z^n conj(p(1/conj(z))): coefficients reversed and conjugated.
/// Exact zero leading coefficients of the result are trimmed, so e.g.
/// z^n maps to the constant 1.
Polynomial conjugate_reciprocal(const Polynomial& p);

/// leading * prod (z - w) over the given zeros. Throws errc::zero_leading.
Polynomial from_zeros(const std::vector<Complex>& zeros, Complex leading);

/// Scalar multiple (used for normalization; exact complex scaling).
Polynomial scale(const Polynomial& p, Complex factor);

Polynomial add(const Polynomial& p, const Polynomial& q);

/// Lacunary classification of p relative to tol * max|a_nu|:
///   mu    - largest value in [1, n] with a_{n-1},...,a_{n-mu+1} below threshold
///   m_idx - largest value in [1, n] with a_1,...,a_{m_idx-1} below threshold
/// `snapped` is p with every sub-threshold coefficient set to exact zero.
struct LacunaryClass {
    int mu = 1;
    int m_idx = 1;
    Polynomial snapped;
};

LacunaryClass classify_lacunary(const Polynomial& p, double tol = 1e-12);

/// Throws error(errc::degree_mismatch) when the declared leading coefficient
/// is numerically zero (<= tol * max|a_nu|); every bound formula depends
/// explicitly on the degree, so such inputs must not be silently deflated.
void require_exact_degree(const Polynomial& p, double tol = 1e-12);

/// Zero-location side of a constrained class.
enum class ZeroSide {
    ZerosInsideClosedDisk, // every zero has |w| <= k
    ZeroFreeOpenDisk,      // no zero has |w| < k
};

/// Lacunary kind of a constrained class.
enum class LacunaryKind {
    TopLacunary,    // a_n z^n + sum_{nu=mu}^{n} a_{n-nu} z^{n-nu}
    BottomLacunary, // a_0 + sum_{nu=m_idx}^{n} a_nu z^nu
};

/// Declared constraint bundle for a polynomial: lacunary shape, disk radius,
/// and which side of the disk the zeros live on.
struct PolyClass {
    LacunaryKind kind = LacunaryKind::TopLacunary;
    int index = 1; // mu for top, m_idx for bottom
    double k = 1.0;
    ZeroSide side = ZeroSide::ZerosInsideClosedDisk;

    bool operator==(const PolyClass& other) const = default;
};

} // namespace polarlab
