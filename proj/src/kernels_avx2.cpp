// AVX2 variant of the squared-modulus batch kernel: four circle points per
// iteration, one complex Horner recurrence per lane. Only mul/add/sub are
// used so every lane matches the scalar kernel bit for bit.

#if defined(__x86_64__) || defined(__i386__)

#include "polarlab/kernels.hpp"

#include <immintrin.h>

namespace polarlab::kernels {

void abs2_batch_avx2(std::span<const Complex> coeffs, std::span<const double> xs,
                     std::span<const double> ys, std::span<double> out) {
    const std::size_t n = coeffs.size();
    const std::size_t npts = xs.size();
    const std::size_t main = npts - npts % 4;

    for (std::size_t j = 0; j < main; j += 4) {
        const __m256d x = _mm256_loadu_pd(xs.data() + j);
        const __m256d y = _mm256_loadu_pd(ys.data() + j);
        __m256d re = _mm256_set1_pd(coeffs[n - 1].real());
        __m256d im = _mm256_set1_pd(coeffs[n - 1].imag());
        for (std::size_t i = n - 1; i-- > 0;) {
            // tre = re*x - im*y + a_re ; tim = re*y + im*x + a_im
            const __m256d tre =
                _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(re, x), _mm256_mul_pd(im, y)),
                              _mm256_set1_pd(coeffs[i].real()));
            const __m256d tim =
                _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(re, y), _mm256_mul_pd(im, x)),
                              _mm256_set1_pd(coeffs[i].imag()));
            re = tre;
            im = tim;
        }
        _mm256_storeu_pd(out.data() + j,
                         _mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im)));
    }

    if (main < npts)
        abs2_batch_scalar(coeffs, xs.subspan(main), ys.subspan(main), out.subspan(main));
}

} // namespace polarlab::kernels

#endif
