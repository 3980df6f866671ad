#include "polarlab/ensembles.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace polarlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// All draws go through these helpers so instances are bit-reproducible
// across platforms (std::uniform_real_distribution is not pinned by the
// standard; mt19937_64 is).
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex unit_phase(std::mt19937_64& rng) {
    const double theta = kTwoPi * uniform01(rng);
    return Complex(std::cos(theta), std::sin(theta));
}

void require_divides(int idx, int n) {
    if (idx < 1 || idx > n || n % idx != 0)
        throw error(errc::non_divisor, "block index must divide the degree");
}

// Zeros of z^idx + c: the idx-th roots of -c.
std::vector<Complex> block_zeros(int idx, Complex c) {
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(idx));
    const double modulus = std::pow(std::abs(c), 1.0 / idx);
    const double base = (std::arg(-c)) / idx;
    for (int l = 0; l < idx; ++l) {
        const double theta = base + kTwoPi * l / idx;
        zeros.emplace_back(modulus * std::cos(theta), modulus * std::sin(theta));
    }
    return zeros;
}

// Product of (z^idx + c_j): expand in y = z^idx, then inflate.
Polynomial block_product(int n, int idx, const std::vector<Complex>& blocks, Complex leading) {
    std::vector<Complex> base{leading};
    for (Complex c : blocks) {
        base.push_back(base.back());
        for (std::size_t j = base.size() - 2; j > 0; --j) base[j] = base[j - 1] + c * base[j];
        base[0] = c * base[0];
    }
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1, Complex(0.0));
    for (std::size_t j = 0; j < base.size(); ++j) coeffs[j * static_cast<std::size_t>(idx)] = base[j];
    return Polynomial(std::move(coeffs));
}

std::string format_double(double x) {
    std::ostringstream out;
    out << x;
    return out.str();
}

} // namespace

GeneratedInstance extremal_block(int n, int idx, double k, ZeroSide side) {
    require_divides(idx, n);
    if (!(k > 0.0)) throw error(errc::non_positive_radius, "k must be > 0");
    const int q = n / idx;
    const double kidx = std::pow(k, idx);

    // Binomial expansion of (y + k^idx)^q in y = z^idx.
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1, Complex(0.0));
    double binom = 1.0;
    for (int j = 0; j <= q; ++j) {
        // coefficient of y^(q-j) is C(q, j) k^(idx j)
        coeffs[static_cast<std::size_t>(idx) * static_cast<std::size_t>(q - j)] =
            binom * std::pow(kidx, j);
        binom = binom * (q - j) / (j + 1);
    }

    std::vector<Complex> zeros;
    zeros.reserve(static_cast<std::size_t>(n));
    const std::vector<Complex> roots = block_zeros(idx, Complex(kidx));
    for (int copy = 0; copy < q; ++copy) zeros.insert(zeros.end(), roots.begin(), roots.end());

    GeneratedInstance inst{Polynomial(std::move(coeffs)),
                           std::move(zeros),
                           PolyClass{side == ZeroSide::ZerosInsideClosedDisk
                                         ? LacunaryKind::TopLacunary
                                         : LacunaryKind::BottomLacunary,
                                     idx, k, side},
                           0,
                           ""};
    inst.label = "block(n=" + std::to_string(n) + ",idx=" + std::to_string(idx) +
                 ",k=" + format_double(k) + ")";
    return inst;
}

GeneratedInstance extremal_binomial(int n, double k) {
    if (!(k > 0.0)) throw error(errc::non_positive_radius, "k must be > 0");
    if (n < 1) throw error(errc::degree_zero, "n must be >= 1");
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
    double binom = 1.0;
    for (int j = 0; j <= n; ++j) {
        // coefficient of z^(n-j) is C(n, j) k^j
        coeffs[static_cast<std::size_t>(n - j)] = binom * std::pow(k, j);
        binom = binom * (n - j) / (j + 1);
    }
    GeneratedInstance inst{Polynomial(std::move(coeffs)),
                           std::vector<Complex>(static_cast<std::size_t>(n), Complex(-k)),
                           PolyClass{LacunaryKind::TopLacunary, 1, k,
                                     ZeroSide::ZerosInsideClosedDisk},
                           0,
                           ""};
    inst.label = "binomial(n=" + std::to_string(n) + ",k=" + format_double(k) + ")";
    return inst;
}

GeneratedInstance random_top_lacunary(int n, int mu, double k, std::uint64_t seed,
                                      double leading_scale) {
    if (n < 1) throw error(errc::degree_zero, "n must be >= 1");
    if (!(k > 0.0)) throw error(errc::non_positive_radius, "k must be > 0");
    if (mu >= 2) require_divides(mu, n);
    if (mu < 1) throw error(errc::non_divisor, "mu must be >= 1");

    std::mt19937_64 rng(seed);
    const Complex leading = leading_scale * unit_phase(rng);

    Polynomial poly({Complex(1.0)});
    std::vector<Complex> zeros;
    if (mu == 1) {
        zeros.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double modulus = k * std::sqrt(uniform01(rng)); // uniform in area
            zeros.push_back(modulus * unit_phase(rng));
        }
        poly = from_zeros(zeros, leading);
    } else {
        std::vector<Complex> blocks(static_cast<std::size_t>(n / mu));
        const double kmu = std::pow(k, mu);
        for (Complex& c : blocks) c = kmu * std::sqrt(uniform01(rng)) * unit_phase(rng);
        poly = block_product(n, mu, blocks, leading);
        for (Complex c : blocks) {
            auto roots = block_zeros(mu, c);
            zeros.insert(zeros.end(), roots.begin(), roots.end());
        }
    }

    GeneratedInstance inst{std::move(poly), std::move(zeros),
                           PolyClass{LacunaryKind::TopLacunary, mu, k,
                                     ZeroSide::ZerosInsideClosedDisk},
                           seed, ""};
    inst.label = "top(n=" + std::to_string(n) + ",mu=" + std::to_string(mu) +
                 ",k=" + format_double(k) + ",seed=" + std::to_string(seed) + ")";
    return inst;
}

GeneratedInstance random_bottom_lacunary_zerofree(int n, int m_idx, double k, double k_max,
                                                  std::uint64_t seed, double leading_scale,
                                                  bool exclude_boundary) {
    if (n < 1) throw error(errc::degree_zero, "n must be >= 1");
    if (!(k > 0.0)) throw error(errc::non_positive_radius, "k must be > 0");
    if (!(k_max > k)) throw error(errc::bad_annulus, "k_max must exceed k");
    if (m_idx >= 2) require_divides(m_idx, n);
    if (m_idx < 1) throw error(errc::non_divisor, "m must be >= 1");

    std::mt19937_64 rng(seed);
    const Complex leading = leading_scale * unit_phase(rng);
    const auto annulus_draw = [&](double lo, double hi) {
        double u = uniform01(rng);
        while (exclude_boundary && u == 0.0) u = uniform01(rng);
        return lo + (hi - lo) * u;
    };

    Polynomial poly({Complex(1.0)});
    std::vector<Complex> zeros;
    if (m_idx == 1) {
        zeros.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            zeros.push_back(annulus_draw(k, k_max) * unit_phase(rng));
        poly = from_zeros(zeros, leading);
    } else {
        std::vector<Complex> blocks(static_cast<std::size_t>(n / m_idx));
        const double km = std::pow(k, m_idx);
        const double km_max = std::pow(k_max, m_idx);
        for (Complex& c : blocks) c = annulus_draw(km, km_max) * unit_phase(rng);
        poly = block_product(n, m_idx, blocks, leading);
        for (Complex c : blocks) {
            auto roots = block_zeros(m_idx, c);
            zeros.insert(zeros.end(), roots.begin(), roots.end());
        }
    }

    GeneratedInstance inst{std::move(poly), std::move(zeros),
                           PolyClass{LacunaryKind::BottomLacunary, m_idx, k,
                                     ZeroSide::ZeroFreeOpenDisk},
                           seed, ""};
    inst.label = "bottom(n=" + std::to_string(n) + ",m=" + std::to_string(m_idx) +
                 ",k=" + format_double(k) + ",seed=" + std::to_string(seed) + ")";
    return inst;
}

GeneratedInstance instance_from_poly(Polynomial p, PolyClass poly_class, std::string label) {
    return GeneratedInstance{std::move(p), {}, poly_class, 0, std::move(label)};
}

} // namespace polarlab
