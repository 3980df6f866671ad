#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <vector>

#include "oracles.hpp"
#include "polarlab/kernels.hpp"

using namespace polarlab;

namespace {

struct Batch {
    std::vector<Complex> coeffs;
    std::vector<double> xs, ys;
};

Batch random_batch(std::mt19937_64& rng, int degree, std::size_t npts) {
    Batch b;
    b.coeffs = oracles::random_poly(rng, degree).coeffs();
    b.xs.resize(npts);
    b.ys.resize(npts);
    for (std::size_t i = 0; i < npts; ++i) {
        const Complex z = oracles::random_point_on_circle(rng, oracles::uniform(rng, 0.1, 3.0));
        b.xs[i] = z.real();
        b.ys[i] = z.imag();
    }
    return b;
}

} // namespace

TEST_CASE("scalar kernel agrees bit-for-bit with Horner through poly::eval") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Batch b = random_batch(rng, static_cast<int>(rng() % 12), 33);
        std::vector<double> out(b.xs.size());
        kernels::abs2_batch_scalar(b.coeffs, b.xs, b.ys, out);
        const Polynomial p{std::vector<Complex>(b.coeffs)};
        for (std::size_t i = 0; i < out.size(); ++i) {
            const Complex v = eval(p, Complex(b.xs[i], b.ys[i]));
            CHECK(out[i] == v.real() * v.real() + v.imag() * v.imag());
        }
    }
}

#if defined(__x86_64__) || defined(__i386__)
TEST_CASE("avx2 kernel is bit-identical to the scalar reference") {
    if (!__builtin_cpu_supports("avx2")) {
        MESSAGE("avx2 not available; skipping");
        return;
    }
    std::mt19937_64 rng(22);
    // Sizes straddling the 4-lane blocking, including the remainder path.
    for (std::size_t npts : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 64u, 257u}) {
        for (int degree : {0, 1, 2, 7, 13, 30}) {
            const Batch b = random_batch(rng, degree, npts);
            std::vector<double> scalar(npts), simd(npts);
            kernels::abs2_batch_scalar(b.coeffs, b.xs, b.ys, scalar);
            kernels::abs2_batch_avx2(b.coeffs, b.xs, b.ys, simd);
            CHECK(std::memcmp(scalar.data(), simd.data(), npts * sizeof(double)) == 0);
        }
    }
}
#endif

TEST_CASE("dispatch honors POLARLAB_KERNEL and reports the active variant") {
    setenv("POLARLAB_KERNEL", "scalar", 1);
    kernels::reset_dispatch_cache();
    CHECK(std::string(kernels::abs2_batch_name()) == "scalar");
    CHECK(kernels::abs2_batch() == &kernels::abs2_batch_scalar);

    unsetenv("POLARLAB_KERNEL");
    kernels::reset_dispatch_cache();
    const std::string active = kernels::abs2_batch_name();
#if defined(__x86_64__) || defined(__i386__)
    if (__builtin_cpu_supports("avx2")) CHECK(active == "avx2");
#else
    CHECK(active == "scalar");
#endif
}

TEST_CASE("circle wrapper hits the same values as direct batch calls") {
    std::mt19937_64 rng(23);
    const Polynomial p = oracles::random_poly(rng, 6);
    std::vector<double> angles{0.0, 0.5, 1.0, 2.0, 3.14, 5.9};
    std::vector<double> out(angles.size());
    kernels::abs2_on_circle(p, 1.25, angles, out);
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const Complex z(1.25 * std::cos(angles[i]), 1.25 * std::sin(angles[i]));
        const Complex v = eval(p, z);
        CHECK(out[i] == v.real() * v.real() + v.imag() * v.imag());
    }
}
