#include "polarlab/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "polarlab/kernels.hpp"

namespace polarlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr long kEvalBudget = 100'000'000; // hard cap on circle evaluations

void check_inputs(double radius, double eps) {
    if (!(radius > 0.0)) throw error(errc::non_positive_radius, "circle radius must be > 0");
    if (!(eps > 0.0)) throw error(errc::non_positive_tolerance, "eps must be > 0");
}

// f(theta) = |p(R e^{i theta})|^2 is a trigonometric polynomial of degree n
// with coefficients c_m = sum_l a_{l+m} conj(a_l) R^{2l+m}. Its second
// derivative is bounded by D2 = 2 sum_{m>=1} m^2 |c_m|; interior extrema of f
// have f' = 0, so on an arc [a, b]
//
//   max f <= max(f(a), f(b)) + D2 (b-a)^2 / 8,
//   min f >= min(f(a), f(b)) - D2 (b-a)^2 / 8   (and f >= 0).
//
// That is the whole certificate; sampled values supply the attained side.
double curvature_bound(const Polynomial& p, double radius) {
    const auto& a = p.coeffs();
    const int n = p.degree();
    double d2 = 0.0;
    for (int m = 1; m <= n; ++m) {
        Complex cm = 0.0;
        double r_pow = std::pow(radius, m);
        for (int l = 0; l + m <= n; ++l) {
            cm += a[static_cast<std::size_t>(l + m)] * std::conj(a[static_cast<std::size_t>(l)]) *
                  r_pow;
            r_pow *= radius * radius;
        }
        d2 += 2.0 * static_cast<double>(m) * static_cast<double>(m) * std::abs(cm);
    }
    return d2;
}

struct Arc {
    double left; // angle of the left endpoint; width is per level
    double f_left;
    double f_right;
};

struct Sample {
    double angle;
    double f;
};

double f_at(const Polynomial& p, double radius, double theta) {
    double out;
    kernels::abs2_on_circle(p, radius, std::span(&theta, 1), std::span(&out, 1));
    return out;
}

/// 60 golden-section iterations on [lo, hi]; returns the best sample seen.
/// Improves the witness (and the attained side) only; the far side of the
/// enclosure rests on the curvature bound alone.
Sample golden_polish(const Polynomial& p, double radius, double lo, double hi, bool maximize) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f_at(p, radius, x1);
    double f2 = f_at(p, radius, x2);
    const auto better = [maximize](double u, double v) { return maximize ? u > v : u < v; };
    for (int i = 0; i < 60; ++i) {
        if (better(f1, f2)) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f_at(p, radius, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f_at(p, radius, x2);
        }
    }
    return better(f1, f2) ? Sample{x1, f1} : Sample{x2, f2};
}

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

CertifiedExtremum solve(const Polynomial& p, double radius, double eps, bool maximize) {
    check_inputs(radius, eps);
    const double d2 = curvature_bound(p, radius);
    const double gap = 0.75 * eps; // enclosure target in |p| units; slack below eps

    const int n0 = std::max(32, 4 * p.degree() + 4);
    const double step0 = kTwoPi / n0;
    std::vector<Arc> active;
    {
        std::vector<double> angles(static_cast<std::size_t>(n0)),
            values(static_cast<std::size_t>(n0));
        for (int i = 0; i < n0; ++i) angles[static_cast<std::size_t>(i)] = step0 * i;
        kernels::abs2_on_circle(p, radius, angles, values);
        active.reserve(angles.size());
        for (int i = 0; i < n0; ++i)
            active.push_back({angles[static_cast<std::size_t>(i)],
                              values[static_cast<std::size_t>(i)],
                              values[static_cast<std::size_t>((i + 1) % n0)]});
    }
    long evals = n0;
    double width = step0;

    double best_f = maximize ? -1.0 : std::numeric_limits<double>::infinity();
    double best_angle = 0.0;
    double best_width = width;
    const auto offer = [&](double f, double angle, double w) {
        const bool better = maximize ? (f > best_f) : (f < best_f);
        if (better || (f == best_f && angle < best_angle)) {
            best_f = f;
            best_angle = angle;
            best_width = w;
        }
    };
    for (const Arc& a : active) offer(a.f_left, a.left, width);

    // Far side of the enclosure over retired arcs, in f units.
    double retired_far = maximize ? -1.0 : std::numeric_limits<double>::infinity();

    std::vector<Arc> survivors;
    std::vector<double> mids, mid_values;
    while (!active.empty()) {
        // Retirement threshold in f units, from the current attained best.
        double threshold;
        if (maximize) {
            const double t = std::sqrt(std::max(best_f, 0.0)) + gap;
            threshold = t * t;
        } else {
            const double t = std::max(0.0, std::sqrt(best_f) - gap);
            threshold = t * t;
        }

        survivors.clear();
        for (const Arc& a : active) {
            const double curv = d2 * width * width / 8.0;
            if (maximize) {
                const double ub = std::max(a.f_left, a.f_right) + curv;
                if (ub <= threshold)
                    retired_far = std::max(retired_far, ub);
                else
                    survivors.push_back(a);
            } else {
                const double lb = std::max(0.0, std::min(a.f_left, a.f_right) - curv);
                if (lb >= threshold)
                    retired_far = std::min(retired_far, lb);
                else
                    survivors.push_back(a);
            }
        }
        if (survivors.empty()) break;

        evals += static_cast<long>(survivors.size());
        if (evals > kEvalBudget)
            throw error(errc::tolerance_unreachable,
                        "evaluation budget exhausted before the enclosure reached eps");

        mids.resize(survivors.size());
        mid_values.resize(survivors.size());
        for (std::size_t i = 0; i < survivors.size(); ++i)
            mids[i] = survivors[i].left + 0.5 * width;
        kernels::abs2_on_circle(p, radius, mids, mid_values);

        width *= 0.5;
        active.clear();
        active.reserve(2 * survivors.size());
        for (std::size_t i = 0; i < survivors.size(); ++i) {
            offer(mid_values[i], mids[i], width);
            active.push_back({survivors[i].left, survivors[i].f_left, mid_values[i]});
            active.push_back({mids[i], mid_values[i], survivors[i].f_right});
        }
    }

    {
        Sample s = golden_polish(p, radius, best_angle - best_width, best_angle + best_width,
                                 maximize);
        offer(s.f, wrap_angle(s.angle), best_width);
    }

    // Convert the f enclosure to |p| units.
    double lo, hi;
    if (maximize) {
        retired_far = std::max(retired_far, best_f);
        lo = std::sqrt(std::max(best_f, 0.0));
        hi = std::sqrt(std::max(retired_far, 0.0));
    } else {
        retired_far = std::min(retired_far, best_f);
        lo = std::sqrt(std::max(retired_far, 0.0));
        hi = std::sqrt(std::max(best_f, 0.0));
    }

    CertifiedExtremum result;
    result.kind = maximize ? ExtremumKind::Max : ExtremumKind::Min;
    result.radius = radius;
    result.witness_angle = wrap_angle(best_angle);
    result.value = 0.5 * (lo + hi);
    result.error_radius = eps;
    if (result.value < eps) {
        // Enclosure touches 0 at working precision: report [0, value + eps'].
        result.error_radius = 0.5 * (result.value + eps);
        result.value = result.error_radius;
    }
    return result;
}

} // namespace

double circle_lipschitz_bound(const Polynomial& p, double radius) {
    if (!(radius > 0.0)) throw error(errc::non_positive_radius, "circle radius must be > 0");
    double sum = 0.0;
    double r_pow = 1.0;
    for (int nu = 1; nu <= p.degree(); ++nu) {
        r_pow *= radius;
        sum += static_cast<double>(nu) * std::abs(p[static_cast<std::size_t>(nu)]) * r_pow;
    }
    return sum;
}

CertifiedExtremum max_modulus(const Polynomial& p, double radius, double eps) {
    return solve(p, radius, eps, true);
}

CertifiedExtremum min_modulus(const Polynomial& p, double radius, double eps) {
    return solve(p, radius, eps, false);
}

int count_zeros_in_disk(const Polynomial& p, double radius) {
    if (!(radius > 0.0)) throw error(errc::non_positive_radius, "circle radius must be > 0");
    const double lipschitz = circle_lipschitz_bound(p, radius);
    const double scale = p.max_coeff_abs();
    if (scale <= 0.0)
        throw error(errc::tolerance_unreachable, "zero polynomial has no winding number");
    const CertifiedExtremum low = min_modulus(p, radius, 1e-9 * scale);
    const double m = low.lower();
    if (m <= 0.0)
        throw error(errc::tolerance_unreachable,
                    "|p| is not certifiably positive on the circle; winding number undefined");

    // Step small enough that consecutive samples stay within m/2 of each
    // other; each argument increment is then below pi/6 and the total
    // winding is counted exactly.
    double steps_d = std::max(64.0, std::ceil(2.0 * kTwoPi * lipschitz / m));
    if (steps_d > 2e7)
        throw error(errc::tolerance_unreachable, "winding number needs too many samples");
    const int steps = static_cast<int>(steps_d);

    double total = 0.0;
    Complex prev = eval(p, Complex(radius, 0.0));
    for (int i = 1; i <= steps; ++i) {
        const double theta = kTwoPi * static_cast<double>(i) / steps;
        const Complex cur = eval(p, Complex(radius * std::cos(theta), radius * std::sin(theta)));
        total += std::arg(cur / prev);
        prev = cur;
    }
    return static_cast<int>(std::lround(total / kTwoPi));
}

} // namespace polarlab
