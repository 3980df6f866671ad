#include "polarlab/poly.hpp"

#include <algorithm>
#include <cmath>

namespace polarlab {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::degree_zero: return "DegreeZero";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::zero_leading: return "ZeroLeading";
        case errc::non_divisor: return "NonDivisor";
        case errc::bad_annulus: return "BadAnnulus";
        case errc::non_positive_radius: return "NonPositiveRadius";
        case errc::non_positive_tolerance: return "NonPositiveTolerance";
        case errc::tolerance_unreachable: return "ToleranceUnreachable";
        case errc::degenerate_denominator: return "DegenerateDenominator";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::bad_theorem: return "BadTheorem";
        case errc::bad_file: return "BadFile";
    }
    return "UnknownError";
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw error(errc::degree_mismatch, "polynomial needs at least one coefficient");
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : Polynomial(std::vector<Complex>(coeffs)) {}

Polynomial Polynomial::monomial(int degree, Complex leading) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, Complex(0.0));
    c.back() = leading;
    return Polynomial(std::move(c));
}

double Polynomial::max_coeff_abs() const noexcept {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex eval(const Polynomial& p, Complex z) {
    const auto& a = p.coeffs();
    Complex acc = a.back();
    for (std::size_t i = a.size() - 1; i-- > 0;) acc = acc * z + a[i];
    return acc;
}

Polynomial derivative(const Polynomial& p) {
    const int n = p.degree();
    if (n == 0) return Polynomial({Complex(0.0)});
    std::vector<Complex> d(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) d[j - 1] = static_cast<double>(j) * p[j];
    return Polynomial(std::move(d));
}

Polynomial polar_derivative(const Polynomial& p, Complex alpha) {
    const int n = p.degree();
    if (n == 0) throw error(errc::degree_zero, "polar derivative needs degree >= 1");
    // Coefficient of z^j in n p + (alpha - z) p' is (n-j) a_j + alpha (j+1) a_{j+1};
    // at j = n the first term vanishes and there is no a_{n+1}, so the degree drops.
    std::vector<Complex> d(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        d[j] = static_cast<double>(n - j) * p[j] + alpha * static_cast<double>(j + 1) * p[j + 1];
    return Polynomial(std::move(d));
}

Polynomial conjugate_reciprocal(const Polynomial& p) {
    std::vector<Complex> q(p.coeffs().size());
    for (std::size_t j = 0; j < q.size(); ++j) q[j] = std::conj(p[q.size() - 1 - j]);
    // Zeros of p at the origin map to infinity: drop the exactly-zero top.
    while (q.size() > 1 && q.back() == Complex(0.0)) q.pop_back();
    return Polynomial(std::move(q));
}

Polynomial from_zeros(const std::vector<Complex>& zeros, Complex leading) {
    if (leading == Complex(0.0))
        throw error(errc::zero_leading, "leading coefficient must be nonzero");
    std::vector<Complex> c{leading};
    for (const Complex& w : zeros) {
        c.push_back(c.back());
        for (std::size_t j = c.size() - 2; j > 0; --j) c[j] = c[j - 1] - w * c[j];
        c[0] = -w * c[0];
    }
    return Polynomial(std::move(c));
}

Polynomial scale(const Polynomial& p, Complex factor) {
    std::vector<Complex> c = p.coeffs();
    for (Complex& x : c) x *= factor;
    return Polynomial(std::move(c));
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    std::vector<Complex> c(std::max(p.coeffs().size(), q.coeffs().size()), Complex(0.0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i] += p[i];
    for (std::size_t i = 0; i < q.coeffs().size(); ++i) c[i] += q[i];
    return Polynomial(std::move(c));
}

LacunaryClass classify_lacunary(const Polynomial& p, double tol) {
    const int n = p.degree();
    if (n < 1) throw error(errc::degree_zero, "lacunary classification needs degree >= 1");
    const double threshold = tol * p.max_coeff_abs();

    std::vector<Complex> snapped = p.coeffs();
    for (Complex& c : snapped)
        if (std::abs(c) <= threshold) c = Complex(0.0);

    int mu = 1;
    while (mu < n && snapped[static_cast<std::size_t>(n - mu)] == Complex(0.0)) ++mu;
    int m_idx = 1;
    while (m_idx < n && snapped[static_cast<std::size_t>(m_idx)] == Complex(0.0)) ++m_idx;

    return LacunaryClass{mu, m_idx, Polynomial(std::move(snapped))};
}

void require_exact_degree(const Polynomial& p, double tol) {
    if (std::abs(p.leading()) <= tol * p.max_coeff_abs() || p.leading() == Complex(0.0))
        throw error(errc::degree_mismatch, "leading coefficient is numerically zero");
}

} // namespace polarlab
