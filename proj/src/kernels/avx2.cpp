// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma on x86-64 only; callers go through kernels::active_ops(),
// which checks CPU support before handing out this table.

#include "pframe/kernels.hpp"

#if defined(PFRAME_KERNELS_AVX2) && defined(__AVX2__)

#include <cmath>
#include <immintrin.h>

namespace pframe::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    if (i + 4 <= n) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        i += 4;
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i];
    return s;
}

double sum_abs_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_and_pd(_mm256_loadu_pd(a + i), kAbsMask));
    double s = hsum(acc);
    for (; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

double sum_sq_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(a + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * a[i];
    return s;
}

double sum_sqrt_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_sqrt_pd(_mm256_loadu_pd(a + i)));
    double s = hsum(acc);
    for (; i < n; ++i) s += std::sqrt(a[i]);
    return s;
}

double max_val_avx2(const double* a, std::size_t n) {
    if (n < 4) {
        double m = a[0];
        for (std::size_t i = 1; i < n; ++i)
            if (a[i] > m) m = a[i];
        return m;
    }
    __m256d acc = _mm256_loadu_pd(a);
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, _mm256_loadu_pd(a + i));
    double m = hmax(acc);
    for (; i < n; ++i)
        if (a[i] > m) m = a[i];
    return m;
}

double max_abs_avx2(const double* a, std::size_t n) {
    if (n < 4) {
        double m = std::fabs(a[0]);
        for (std::size_t i = 1; i < n; ++i) {
            const double v = std::fabs(a[i]);
            if (v > m) m = v;
        }
        return m;
    }
    __m256d acc = _mm256_and_pd(_mm256_loadu_pd(a), kAbsMask);
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_and_pd(_mm256_loadu_pd(a + i), kAbsMask));
    double m = hmax(acc);
    for (; i < n; ++i) {
        const double v = std::fabs(a[i]);
        if (v > m) m = v;
    }
    return m;
}

void sq_mag_interleaved_avx2(const double* z, std::size_t n, double* out) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        // two registers hold (re0,im0,re1,im1) and (re2,im2,re3,im3)
        const __m256d z0 = _mm256_loadu_pd(z + 2 * i);
        const __m256d z1 = _mm256_loadu_pd(z + 2 * i + 4);
        const __m256d sq0 = _mm256_mul_pd(z0, z0);
        const __m256d sq1 = _mm256_mul_pd(z1, z1);
        // re^2+im^2 per pair via horizontal add, then fix lane order
        const __m256d h = _mm256_hadd_pd(sq0, sq1); // (p0, p2, p1, p3)
        _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, 0b11011000));
    }
    for (; i < n; ++i) {
        const double re = z[2 * i];
        const double im = z[2 * i + 1];
        out[i] = re * re + im * im;
    }
}

} // namespace

const Ops* avx2_ops_impl() {
    static const Ops ops{
        "avx2",
        dot_avx2,
        sum_avx2,
        sum_abs_avx2,
        sum_sq_avx2,
        sum_sqrt_avx2,
        max_val_avx2,
        max_abs_avx2,
        sq_mag_interleaved_avx2,
    };
    return &ops;
}

} // namespace pframe::kernels

#else

namespace pframe::kernels {
const Ops* avx2_ops_impl() { return nullptr; }
} // namespace pframe::kernels

#endif
