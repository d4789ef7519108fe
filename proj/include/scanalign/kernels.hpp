#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops used by the feature matcher, the Gaussian
// pyramid and the point-cloud transform path. Every kernel has a scalar
// reference implementation plus SIMD variants (AVX2 on x86-64, NEON on
// aarch64) that are selected once at runtime from CPU capabilities.
// The SIMD variants are equivalence-tested against the scalar reference.

namespace scanalign::kernels {

enum class Backend { Scalar, Avx2, Neon };

Backend active_backend();
const char* backend_name(Backend b);
const char* active_backend_name();

// Returns true if the backend can run on this CPU.
bool backend_supported(Backend b);

// Overrides automatic selection. Throws std::invalid_argument if the
// requested backend is not supported on this CPU. Not safe to call while
// kernels are executing on other threads; intended for startup and tests.
void force_backend(Backend b);

// Restores automatic CPU-based selection.
void reset_backend();

// Squared Euclidean distance between two float vectors.
float l2sq_f32(const float* a, const float* b, std::size_t n);

// dst[i] += w * src[i]
void madd_f32(float* dst, const float* src, float w, std::size_t n);

// 1-D symmetric-window convolution with clamp-to-edge boundaries:
// dst[i] = sum_{k=-radius..radius} kernel[k+radius] * src[clamp(i+k)].
// src and dst must not alias.
void conv_row_f32(const float* src, float* dst, std::size_t n,
                  const float* kernel, int radius);

// Nearest and second-nearest row of `base` (count rows of `dim` floats)
// to `query` under squared L2. Indices are -1 when not enough rows.
// Ties keep the lower row index.
struct Nearest2 {
    std::int32_t best = -1;
    std::int32_t second = -1;
    float best_d2 = 0.0f;
    float second_d2 = 0.0f;
};
Nearest2 nn2_l2sq_f32(const float* query, const float* base,
                      std::size_t count, std::size_t dim);

// out[i] = R * in[i] + t for packed xyz triples. R is row-major 3x3.
// in and out may alias only if identical.
void transform_points_f64(const double* in_xyz, double* out_xyz,
                          std::size_t n, const double* rot, const double* trans);

namespace detail {

struct KernelTable {
    float (*l2sq_f32)(const float*, const float*, std::size_t);
    void (*madd_f32)(float*, const float*, float, std::size_t);
    void (*conv_row_f32)(const float*, float*, std::size_t, const float*, int);
    Nearest2 (*nn2_l2sq_f32)(const float*, const float*, std::size_t, std::size_t);
    void (*transform_points_f64)(const double*, double*, std::size_t,
                                 const double*, const double*);
    Backend backend;
};

const KernelTable& scalar_table();
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
const KernelTable& avx2_table();
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
const KernelTable& neon_table();
#endif

const KernelTable& active_table();

} // namespace detail

} // namespace scanalign::kernels
