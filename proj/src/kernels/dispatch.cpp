#include "scanalign/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace scanalign::kernels {

namespace detail {
namespace {

const KernelTable* detect() {
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return &avx2_table();
#elif defined(__aarch64__) || defined(__ARM_NEON)
    return &neon_table();
#endif
    return &scalar_table();
}

std::atomic<const KernelTable*> g_active{nullptr};

} // namespace

const KernelTable& active_table() {
    const KernelTable* t = g_active.load(std::memory_order_acquire);
    if (!t) {
        t = detect();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

} // namespace detail

bool backend_supported(Backend b) {
    switch (b) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Backend::Neon:
#if defined(__aarch64__) || defined(__ARM_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

void force_backend(Backend b) {
    if (!backend_supported(b))
        throw std::invalid_argument("kernel backend not supported on this CPU");
    const detail::KernelTable* t = nullptr;
    switch (b) {
    case Backend::Scalar:
        t = &detail::scalar_table();
        break;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
        t = &detail::avx2_table();
#endif
        break;
    case Backend::Neon:
#if defined(__aarch64__) || defined(__ARM_NEON)
        t = &detail::neon_table();
#endif
        break;
    }
    detail::g_active.store(t, std::memory_order_release);
}

void reset_backend() {
    detail::g_active.store(nullptr, std::memory_order_release);
}

Backend active_backend() { return detail::active_table().backend; }

const char* backend_name(Backend b) {
    switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
    }
    return "unknown";
}

const char* active_backend_name() { return backend_name(active_backend()); }

float l2sq_f32(const float* a, const float* b, std::size_t n) {
    return detail::active_table().l2sq_f32(a, b, n);
}

void madd_f32(float* dst, const float* src, float w, std::size_t n) {
    detail::active_table().madd_f32(dst, src, w, n);
}

void conv_row_f32(const float* src, float* dst, std::size_t n,
                  const float* kernel, int radius) {
    detail::active_table().conv_row_f32(src, dst, n, kernel, radius);
}

Nearest2 nn2_l2sq_f32(const float* query, const float* base,
                      std::size_t count, std::size_t dim) {
    return detail::active_table().nn2_l2sq_f32(query, base, count, dim);
}

void transform_points_f64(const double* in_xyz, double* out_xyz, std::size_t n,
                          const double* rot, const double* trans) {
    detail::active_table().transform_points_f64(in_xyz, out_xyz, n, rot, trans);
}

} // namespace scanalign::kernels
