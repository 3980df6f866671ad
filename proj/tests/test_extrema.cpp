#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "oracles.hpp"
#include "polarlab/extrema.hpp"
#include "polarlab/kernels.hpp"

using namespace polarlab;
using doctest::Approx;

TEST_CASE("circle lipschitz bound: monomial, constant, hand sum") {
    CHECK(circle_lipschitz_bound(Polynomial::monomial(4), 2.0) == Approx(4.0 * 16.0));
    CHECK(circle_lipschitz_bound(Polynomial{3.0}, 1.0) == 0.0);
    CHECK(circle_lipschitz_bound(Polynomial{1.0, 1.0, 1.0}, 1.0) == Approx(3.0));
    CHECK_THROWS_AS(circle_lipschitz_bound(Polynomial{1.0}, 0.0), error);
}

TEST_CASE("max_modulus: monomials have constant modulus R^n") {
    for (int n : {1, 4, 8}) {
        for (double radius : {0.5, 1.0, 2.0}) {
            const auto e = max_modulus(Polynomial::monomial(n), radius, 1e-10);
            CHECK(e.value == Approx(std::pow(radius, n)).epsilon(1e-9));
            CHECK(e.error_radius <= 1e-10);
        }
    }
}

TEST_CASE("max_modulus: (z+1)^2 peaks at angle 0 with value 4") {
    const auto e = max_modulus(Polynomial{1.0, 2.0, 1.0}, 1.0, 1e-9);
    CHECK(e.value == Approx(4.0).epsilon(1e-8));
    const double wrapped = std::min(e.witness_angle, 2.0 * std::numbers::pi - e.witness_angle);
    CHECK(wrapped < 1e-4);
}

TEST_CASE("max_modulus: z^2 + z + 1 reaches 3 on the unit circle") {
    const auto e = max_modulus(Polynomial{1.0, 1.0, 1.0}, 1.0, 1e-8);
    CHECK(e.value == Approx(3.0).epsilon(1e-7));
    CHECK(oracles::dense_max(Polynomial{1.0, 1.0, 1.0}, 1.0) <= e.upper());
}

TEST_CASE("min_modulus: zero on the circle, monomial, (z+2)^3") {
    const Polynomial root_on_circle = add(Polynomial::monomial(5), Polynomial{std::pow(0.7, 5)});
    const auto zero = min_modulus(root_on_circle, 0.7, 1e-9);
    CHECK(zero.lower() == 0.0);
    CHECK(zero.value <= 1e-9);

    const auto mono = min_modulus(Polynomial::monomial(3), 1.4, 1e-9);
    CHECK(mono.value == Approx(std::pow(1.4, 3)).epsilon(1e-8));

    const auto cube = min_modulus(Polynomial{8.0, 12.0, 6.0, 1.0}, 1.0, 1e-9);
    CHECK(cube.value == Approx(1.0).epsilon(1e-8)); // minimum at z = -1
}

TEST_CASE("input validation") {
    CHECK_THROWS_WITH_AS(max_modulus(Polynomial{1.0}, -1.0, 1e-6),
                         doctest::Contains("NonPositiveRadius"), error);
    CHECK_THROWS_WITH_AS(min_modulus(Polynomial{1.0}, 1.0, 0.0),
                         doctest::Contains("NonPositiveTolerance"), error);
}

TEST_CASE("oracle agreement: certified enclosure contains the dense estimate") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial p = oracles::random_poly(rng, 1 + static_cast<int>(rng() % 8));
        const double radius = oracles::uniform(rng, 0.4, 2.0);
        const auto mx = max_modulus(p, radius, 1e-6);
        const auto mn = min_modulus(p, radius, 1e-6);
        const double dmx = oracles::dense_max(p, radius);
        const double dmn = oracles::dense_min(p, radius);
        CHECK(mx.lower() <= dmx);
        CHECK(dmx <= mx.upper());
        CHECK(mn.lower() <= dmn);
        CHECK(dmn <= mn.upper());
    }
}

TEST_CASE("monotone growth of the max in the radius") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial p = oracles::random_poly(rng, 1 + static_cast<int>(rng() % 8));
        const double r1 = oracles::uniform(rng, 0.2, 1.5);
        const double r2 = r1 + oracles::uniform(rng, 0.0, 1.0);
        const double eps = 1e-7;
        CHECK(max_modulus(p, r2, eps).value >= max_modulus(p, r1, eps).value - 2.0 * eps);
    }
}

TEST_CASE("scaling: extrema of c*p are |c| times extrema of p") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 15; ++trial) {
        const Polynomial p = oracles::random_poly(rng, 1 + static_cast<int>(rng() % 6));
        const Complex c = oracles::uniform(rng, 0.1, 5.0) * oracles::random_unit(rng);
        const double eps = 1e-8;
        const auto plain = max_modulus(p, 1.0, eps);
        const auto scaled = max_modulus(scale(p, c), 1.0, eps);
        CHECK(std::abs(scaled.value - std::abs(c) * plain.value) <=
              eps * (1.0 + std::abs(c)) + 1e-12);
    }
}

TEST_CASE("min <= max + 2 eps") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 15; ++trial) {
        const Polynomial p = oracles::random_poly(rng, static_cast<int>(rng() % 9));
        const double eps = 1e-7;
        CHECK(min_modulus(p, 1.0, eps).value <= max_modulus(p, 1.0, eps).value + 2.0 * eps);
    }
}

TEST_CASE("deterministic and kernel-independent") {
    std::mt19937_64 rng(35);
    const Polynomial p = oracles::random_poly(rng, 7);

    const auto a = max_modulus(p, 1.3, 1e-8);
    const auto b = max_modulus(p, 1.3, 1e-8);
    CHECK(a.value == b.value);
    CHECK(a.witness_angle == b.witness_angle);

    setenv("POLARLAB_KERNEL", "scalar", 1);
    kernels::reset_dispatch_cache();
    const auto scalar = max_modulus(p, 1.3, 1e-8);
    unsetenv("POLARLAB_KERNEL");
    kernels::reset_dispatch_cache();
    const auto native = max_modulus(p, 1.3, 1e-8);
    CHECK(scalar.value == native.value);
    CHECK(scalar.witness_angle == native.witness_angle);
    CHECK(scalar.error_radius == native.error_radius);
}

TEST_CASE("witness angle attains the reported value within the radius") {
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 10; ++trial) {
        const Polynomial p = oracles::random_poly(rng, 1 + static_cast<int>(rng() % 8));
        const auto e = max_modulus(p, 1.0, 1e-8);
        CHECK(e.witness_angle >= 0.0);
        CHECK(e.witness_angle < 2.0 * std::numbers::pi);
        const double attained =
            std::abs(eval(p, Complex(std::cos(e.witness_angle), std::sin(e.witness_angle))));
        CHECK(std::abs(attained - e.value) <= e.error_radius);
    }
}

TEST_CASE("count_zeros_in_disk via the argument principle") {
    CHECK(count_zeros_in_disk(Polynomial::monomial(5), 0.8) == 5);
    CHECK(count_zeros_in_disk(Polynomial{8.0, 12.0, 6.0, 1.0}, 1.0) == 0);  // (z+2)^3
    const Polynomial mixed = from_zeros({Complex(0.5), Complex(-2.0)}, 1.0);
    CHECK(count_zeros_in_disk(mixed, 1.0) == 1);
    // A zero on the circle makes the winding number uncertifiable.
    CHECK_THROWS_WITH_AS(count_zeros_in_disk(Polynomial{-1.0, 1.0}, 1.0),
                         doctest::Contains("ToleranceUnreachable"), error);
}
