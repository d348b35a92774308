#include "isospec/simd/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace isospec::simd {

namespace {

void add_neon(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(dst + i, vaddq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    for (; i < n; ++i) {
        dst[i] = a[i] + b[i];
    }
}

void accumulate_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_u64(dst + i, vaddq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    }
    for (; i < n; ++i) {
        dst[i] += src[i];
    }
}

// NEON has no 64-bit lane multiply; widen 32x32 partial products.
void axpy_neon(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t factor, std::size_t n)
{
    const uint32x2_t f_lo = vdup_n_u32(static_cast<std::uint32_t>(factor));
    const uint32x2_t f_hi = vdup_n_u32(static_cast<std::uint32_t>(factor >> 32));
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t v = vld1q_u64(src + i);
        const uint32x2_t v_lo = vmovn_u64(v);
        const uint32x2_t v_hi = vshrn_n_u64(v, 32);
        uint64x2_t prod = vmull_u32(v_lo, f_lo);
        const uint64x2_t cross = vaddq_u64(vmull_u32(v_hi, f_lo), vmull_u32(v_lo, f_hi));
        prod = vaddq_u64(prod, vshlq_n_u64(cross, 32));
        vst1q_u64(dst + i, vaddq_u64(vld1q_u64(dst + i), prod));
    }
    for (; i < n; ++i) {
        dst[i] += factor * src[i];
    }
}

} // namespace

const KernelTable* neon_kernels() noexcept
{
    static const KernelTable table{add_neon, accumulate_neon, axpy_neon};
    return &table;
}

} // namespace isospec::simd

#else

namespace isospec::simd {
const KernelTable* neon_kernels() noexcept { return nullptr; }
} // namespace isospec::simd

#endif
