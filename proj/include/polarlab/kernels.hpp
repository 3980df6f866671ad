#pragma once

#include <cstddef>
#include <span>

#include "polarlab/poly.hpp"

namespace polarlab::kernels {

/// Batch squared-modulus evaluation: out[j] = |p(xs[j] + i*ys[j])|^2 by
/// complex Horner. This is the inner loop of every circle scan; coeffs is
/// ascending powers and never empty. Scalar and SIMD variants compute
/// identical bits (same operation order per point, no FMA contraction).
using Abs2BatchFn = void (*)(std::span<const Complex> coeffs, std::span<const double> xs,
                             std::span<const double> ys, std::span<double> out);

void abs2_batch_scalar(std::span<const Complex> coeffs, std::span<const double> xs,
                       std::span<const double> ys, std::span<double> out);

#if defined(__x86_64__) || defined(__i386__)
void abs2_batch_avx2(std::span<const Complex> coeffs, std::span<const double> xs,
                     std::span<const double> ys, std::span<double> out);
#endif

/// Active kernel, picked once per process: the widest variant the CPU
/// supports, unless POLARLAB_KERNEL=scalar|avx2|auto overrides it.
Abs2BatchFn abs2_batch();
const char* abs2_batch_name();

/// Re-reads POLARLAB_KERNEL and re-detects; for tests.
void reset_dispatch_cache();

/// Convenience wrapper: out[j] = |p(R e^{i angles[j]})|^2.
void abs2_on_circle(const Polynomial& p, double radius, std::span<const double> angles,
                    std::span<double> out);

} // namespace polarlab::kernels
