#include "polarlab/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

namespace polarlab::kernels {

void abs2_batch_scalar(std::span<const Complex> coeffs, std::span<const double> xs,
                       std::span<const double> ys, std::span<double> out) {
    const std::size_t n = coeffs.size();
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const double x = xs[j];
        const double y = ys[j];
        double re = coeffs[n - 1].real();
        double im = coeffs[n - 1].imag();
        for (std::size_t i = n - 1; i-- > 0;) {
            const double tre = re * x - im * y + coeffs[i].real();
            const double tim = re * y + im * x + coeffs[i].imag();
            re = tre;
            im = tim;
        }
        out[j] = re * re + im * im;
    }
}

namespace {

Abs2BatchFn pick_kernel() {
    const char* env = std::getenv("POLARLAB_KERNEL");
    const std::string want = env ? env : "auto";
    if (want == "scalar") return &abs2_batch_scalar;
#if defined(__x86_64__) || defined(__i386__)
    if (want == "avx2") return &abs2_batch_avx2;
    if (want == "auto" && __builtin_cpu_supports("avx2")) return &abs2_batch_avx2;
#endif
    return &abs2_batch_scalar;
}

std::atomic<Abs2BatchFn> g_active{nullptr};

} // namespace

Abs2BatchFn abs2_batch() {
    Abs2BatchFn fn = g_active.load(std::memory_order_relaxed);
    if (!fn) {
        fn = pick_kernel();
        g_active.store(fn, std::memory_order_relaxed);
    }
    return fn;
}

const char* abs2_batch_name() {
    Abs2BatchFn fn = abs2_batch();
#if defined(__x86_64__) || defined(__i386__)
    if (fn == &abs2_batch_avx2) return "avx2";
#endif
    return "scalar";
}

void reset_dispatch_cache() { g_active.store(nullptr, std::memory_order_relaxed); }

void abs2_on_circle(const Polynomial& p, double radius, std::span<const double> angles,
                    std::span<double> out) {
    std::vector<double> xs(angles.size()), ys(angles.size());
    for (std::size_t j = 0; j < angles.size(); ++j) {
        xs[j] = radius * std::cos(angles[j]);
        ys[j] = radius * std::sin(angles[j]);
    }
    abs2_batch()(p.coeffs(), xs, ys, out);
}

} // namespace polarlab::kernels
