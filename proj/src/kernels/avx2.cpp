// AVX2 + FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be reached through the dispatch table after
// runtime CPU detection.

#include "scanalign/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>

namespace scanalign::kernels::detail {
namespace {

inline float hsum256(__m256 v) {
    __m128 lo = _mm256_castps256_ps128(v);
    __m128 hi = _mm256_extractf128_ps(v, 1);
    lo = _mm_add_ps(lo, hi);
    lo = _mm_hadd_ps(lo, lo);
    lo = _mm_hadd_ps(lo, lo);
    return _mm_cvtss_f32(lo);
}

float l2sq_avx2(const float* a, const float* b, std::size_t n) {
    __m256 acc0 = _mm256_setzero_ps();
    __m256 acc1 = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m256 d0 = _mm256_sub_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i));
        const __m256 d1 = _mm256_sub_ps(_mm256_loadu_ps(a + i + 8), _mm256_loadu_ps(b + i + 8));
        acc0 = _mm256_fmadd_ps(d0, d0, acc0);
        acc1 = _mm256_fmadd_ps(d1, d1, acc1);
    }
    for (; i + 8 <= n; i += 8) {
        const __m256 d = _mm256_sub_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i));
        acc0 = _mm256_fmadd_ps(d, d, acc0);
    }
    float acc = hsum256(_mm256_add_ps(acc0, acc1));
    for (; i < n; ++i) {
        const float d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void madd_avx2(float* dst, const float* src, float w, std::size_t n) {
    const __m256 ww = _mm256_set1_ps(w);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 d = _mm256_loadu_ps(dst + i);
        const __m256 s = _mm256_loadu_ps(src + i);
        _mm256_storeu_ps(dst + i, _mm256_fmadd_ps(ww, s, d));
    }
    for (; i < n; ++i) dst[i] += w * src[i];
}

void conv_row_avx2(const float* src, float* dst, std::size_t n,
                   const float* kernel, int radius) {
    const long nn = static_cast<long>(n);
    const long lo = std::min<long>(radius, nn);
    const long hi = std::max<long>(lo, nn - radius);

    auto edge = [&](long i) {
        float acc = 0.0f;
        for (int k = -radius; k <= radius; ++k) {
            long j = std::clamp(i + k, 0L, nn - 1);
            acc += kernel[k + radius] * src[j];
        }
        dst[i] = acc;
    };

    for (long i = 0; i < lo; ++i) edge(i);
    long i = lo;
    for (; i + 8 <= hi; i += 8) {
        __m256 acc = _mm256_setzero_ps();
        for (int k = -radius; k <= radius; ++k) {
            const __m256 w = _mm256_set1_ps(kernel[k + radius]);
            acc = _mm256_fmadd_ps(w, _mm256_loadu_ps(src + i + k), acc);
        }
        _mm256_storeu_ps(dst + i, acc);
    }
    for (; i < hi; ++i) {
        float acc = 0.0f;
        for (int k = -radius; k <= radius; ++k)
            acc += kernel[k + radius] * src[i + k];
        dst[i] = acc;
    }
    for (i = hi; i < nn; ++i) edge(i);
}

Nearest2 nn2_avx2(const float* query, const float* base,
                  std::size_t count, std::size_t dim) {
    Nearest2 r;
    for (std::size_t i = 0; i < count; ++i) {
        const float d2 = l2sq_avx2(query, base + i * dim, dim);
        if (r.best < 0 || d2 < r.best_d2) {
            r.second = r.best;
            r.second_d2 = r.best_d2;
            r.best = static_cast<std::int32_t>(i);
            r.best_d2 = d2;
        } else if (r.second < 0 || d2 < r.second_d2) {
            r.second = static_cast<std::int32_t>(i);
            r.second_d2 = d2;
        }
    }
    return r;
}

void transform_points_avx2(const double* in, double* out, std::size_t n,
                           const double* rot, const double* trans) {
    const __m256d r00 = _mm256_set1_pd(rot[0]), r01 = _mm256_set1_pd(rot[1]), r02 = _mm256_set1_pd(rot[2]);
    const __m256d r10 = _mm256_set1_pd(rot[3]), r11 = _mm256_set1_pd(rot[4]), r12 = _mm256_set1_pd(rot[5]);
    const __m256d r20 = _mm256_set1_pd(rot[6]), r21 = _mm256_set1_pd(rot[7]), r22 = _mm256_set1_pd(rot[8]);
    const __m256d tx = _mm256_set1_pd(trans[0]), ty = _mm256_set1_pd(trans[1]), tz = _mm256_set1_pd(trans[2]);

    std::size_t i = 0;
    alignas(32) double bx[4], by[4], bz[4];
    for (; i + 4 <= n; i += 4) {
        const double* p = in + 3 * i;
        const __m256d x = _mm256_set_pd(p[9], p[6], p[3], p[0]);
        const __m256d y = _mm256_set_pd(p[10], p[7], p[4], p[1]);
        const __m256d z = _mm256_set_pd(p[11], p[8], p[5], p[2]);
        _mm256_store_pd(bx, _mm256_fmadd_pd(r00, x, _mm256_fmadd_pd(r01, y, _mm256_fmadd_pd(r02, z, tx))));
        _mm256_store_pd(by, _mm256_fmadd_pd(r10, x, _mm256_fmadd_pd(r11, y, _mm256_fmadd_pd(r12, z, ty))));
        _mm256_store_pd(bz, _mm256_fmadd_pd(r20, x, _mm256_fmadd_pd(r21, y, _mm256_fmadd_pd(r22, z, tz))));
        double* q = out + 3 * i;
        for (int k = 0; k < 4; ++k) {
            q[3 * k] = bx[k];
            q[3 * k + 1] = by[k];
            q[3 * k + 2] = bz[k];
        }
    }
    for (; i < n; ++i) {
        const double x = in[3 * i], y = in[3 * i + 1], z = in[3 * i + 2];
        out[3 * i]     = rot[0] * x + rot[1] * y + rot[2] * z + trans[0];
        out[3 * i + 1] = rot[3] * x + rot[4] * y + rot[5] * z + trans[1];
        out[3 * i + 2] = rot[6] * x + rot[7] * y + rot[8] * z + trans[2];
    }
}

} // namespace

const KernelTable& avx2_table() {
    static const KernelTable t{l2sq_avx2, madd_avx2, conv_row_avx2,
                               nn2_avx2, transform_points_avx2, Backend::Avx2};
    return t;
}

} // namespace scanalign::kernels::detail

#endif
