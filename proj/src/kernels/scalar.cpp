#include "scanalign/kernels.hpp"

#include <algorithm>

namespace scanalign::kernels::detail {
namespace {

float l2sq_scalar(const float* a, const float* b, std::size_t n) {
    float acc = 0.0f;
    for (std::size_t i = 0; i < n; ++i) {
        const float d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void madd_scalar(float* dst, const float* src, float w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += w * src[i];
}

void conv_row_scalar(const float* src, float* dst, std::size_t n,
                     const float* kernel, int radius) {
    const long nn = static_cast<long>(n);
    for (long i = 0; i < nn; ++i) {
        float acc = 0.0f;
        for (int k = -radius; k <= radius; ++k) {
            long j = i + k;
            j = std::clamp(j, 0L, nn - 1);
            acc += kernel[k + radius] * src[j];
        }
        dst[i] = acc;
    }
}

Nearest2 nn2_scalar(const float* query, const float* base,
                    std::size_t count, std::size_t dim) {
    Nearest2 r;
    for (std::size_t i = 0; i < count; ++i) {
        const float d2 = l2sq_scalar(query, base + i * dim, dim);
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

void transform_points_scalar(const double* in, double* out, std::size_t n,
                             const double* rot, const double* trans) {
    for (std::size_t i = 0; i < n; ++i) {
        const double x = in[3 * i], y = in[3 * i + 1], z = in[3 * i + 2];
        out[3 * i]     = rot[0] * x + rot[1] * y + rot[2] * z + trans[0];
        out[3 * i + 1] = rot[3] * x + rot[4] * y + rot[5] * z + trans[1];
        out[3 * i + 2] = rot[6] * x + rot[7] * y + rot[8] * z + trans[2];
    }
}

} // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{l2sq_scalar, madd_scalar, conv_row_scalar,
                               nn2_scalar, transform_points_scalar,
                               Backend::Scalar};
    return t;
}

} // namespace scanalign::kernels::detail
