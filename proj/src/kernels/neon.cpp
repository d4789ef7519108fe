// NEON kernel variants for aarch64. NEON is baseline on aarch64, so these
// need no extra compile flags; dispatch still goes through the table so the
// scalar reference stays runnable for equivalence tests.

#include "scanalign/kernels.hpp"

#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

#include <algorithm>

namespace scanalign::kernels::detail {
namespace {

float l2sq_neon(const float* a, const float* b, std::size_t n) {
    float32x4_t acc0 = vdupq_n_f32(0.0f);
    float32x4_t acc1 = vdupq_n_f32(0.0f);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const float32x4_t d0 = vsubq_f32(vld1q_f32(a + i), vld1q_f32(b + i));
        const float32x4_t d1 = vsubq_f32(vld1q_f32(a + i + 4), vld1q_f32(b + i + 4));
        acc0 = vfmaq_f32(acc0, d0, d0);
        acc1 = vfmaq_f32(acc1, d1, d1);
    }
    for (; i + 4 <= n; i += 4) {
        const float32x4_t d = vsubq_f32(vld1q_f32(a + i), vld1q_f32(b + i));
        acc0 = vfmaq_f32(acc0, d, d);
    }
    float acc = vaddvq_f32(vaddq_f32(acc0, acc1));
    for (; i < n; ++i) {
        const float d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void madd_neon(float* dst, const float* src, float w, std::size_t n) {
    const float32x4_t ww = vdupq_n_f32(w);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float32x4_t d = vld1q_f32(dst + i);
        const float32x4_t s = vld1q_f32(src + i);
        vst1q_f32(dst + i, vfmaq_f32(d, ww, s));
    }
    for (; i < n; ++i) dst[i] += w * src[i];
}

void conv_row_neon(const float* src, float* dst, std::size_t n,
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
    for (; i + 4 <= hi; i += 4) {
        float32x4_t acc = vdupq_n_f32(0.0f);
        for (int k = -radius; k <= radius; ++k) {
            const float32x4_t w = vdupq_n_f32(kernel[k + radius]);
            acc = vfmaq_f32(acc, w, vld1q_f32(src + i + k));
        }
        vst1q_f32(dst + i, acc);
    }
    for (; i < hi; ++i) {
        float acc = 0.0f;
        for (int k = -radius; k <= radius; ++k)
            acc += kernel[k + radius] * src[i + k];
        dst[i] = acc;
    }
    for (i = hi; i < nn; ++i) edge(i);
}

Nearest2 nn2_neon(const float* query, const float* base,
                  std::size_t count, std::size_t dim) {
    Nearest2 r;
    for (std::size_t i = 0; i < count; ++i) {
        const float d2 = l2sq_neon(query, base + i * dim, dim);
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

void transform_points_neon(const double* in, double* out, std::size_t n,
                           const double* rot, const double* trans) {
#if defined(__aarch64__)
    // Two points per step using 2-lane f64 vectors per coordinate.
    const float64x2_t r00 = vdupq_n_f64(rot[0]), r01 = vdupq_n_f64(rot[1]), r02 = vdupq_n_f64(rot[2]);
    const float64x2_t r10 = vdupq_n_f64(rot[3]), r11 = vdupq_n_f64(rot[4]), r12 = vdupq_n_f64(rot[5]);
    const float64x2_t r20 = vdupq_n_f64(rot[6]), r21 = vdupq_n_f64(rot[7]), r22 = vdupq_n_f64(rot[8]);
    const float64x2_t tx = vdupq_n_f64(trans[0]), ty = vdupq_n_f64(trans[1]), tz = vdupq_n_f64(trans[2]);
    std::size_t i = 0;
    double bx[2], by[2], bz[2];
    for (; i + 2 <= n; i += 2) {
        const double* p = in + 3 * i;
        const float64x2_t x = {p[0], p[3]};
        const float64x2_t y = {p[1], p[4]};
        const float64x2_t z = {p[2], p[5]};
        vst1q_f64(bx, vfmaq_f64(vfmaq_f64(vfmaq_f64(tx, r02, z), r01, y), r00, x));
        vst1q_f64(by, vfmaq_f64(vfmaq_f64(vfmaq_f64(ty, r12, z), r11, y), r10, x));
        vst1q_f64(bz, vfmaq_f64(vfmaq_f64(vfmaq_f64(tz, r22, z), r21, y), r20, x));
        double* q = out + 3 * i;
        q[0] = bx[0]; q[1] = by[0]; q[2] = bz[0];
        q[3] = bx[1]; q[4] = by[1]; q[5] = bz[1];
    }
    for (; i < n; ++i) {
        const double x = in[3 * i], y = in[3 * i + 1], z = in[3 * i + 2];
        out[3 * i]     = rot[0] * x + rot[1] * y + rot[2] * z + trans[0];
        out[3 * i + 1] = rot[3] * x + rot[4] * y + rot[5] * z + trans[1];
        out[3 * i + 2] = rot[6] * x + rot[7] * y + rot[8] * z + trans[2];
    }
#else
    for (std::size_t i = 0; i < n; ++i) {
        const double x = in[3 * i], y = in[3 * i + 1], z = in[3 * i + 2];
        out[3 * i]     = rot[0] * x + rot[1] * y + rot[2] * z + trans[0];
        out[3 * i + 1] = rot[3] * x + rot[4] * y + rot[5] * z + trans[1];
        out[3 * i + 2] = rot[6] * x + rot[7] * y + rot[8] * z + trans[2];
    }
#endif
}

} // namespace

const KernelTable& neon_table() {
    static const KernelTable t{l2sq_neon, madd_neon, conv_row_neon,
                               nn2_neon, transform_points_neon, Backend::Neon};
    return t;
}

} // namespace scanalign::kernels::detail

#endif
