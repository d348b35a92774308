#include "isospec/simd/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

namespace isospec::simd {

namespace {

void add_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(va, vb));
    }
    for (; i < n; ++i) {
        dst[i] = a[i] + b[i];
    }
}

void accumulate_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(vd, vs));
    }
    for (; i < n; ++i) {
        dst[i] += src[i];
    }
}

// 64x64 -> low 64 bits from 32-bit partial products (no native epi64 mullo in AVX2).
inline __m256i mullo_epi64(__m256i x, __m256i y)
{
    const __m256i lo = _mm256_mul_epu32(x, y);
    const __m256i x_hi = _mm256_srli_epi64(x, 32);
    const __m256i y_hi = _mm256_srli_epi64(y, 32);
    const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(x_hi, y), _mm256_mul_epu32(x, y_hi));
    return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

void axpy_avx2(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t factor, std::size_t n)
{
    const __m256i vf = _mm256_set1_epi64x(static_cast<long long>(factor));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_add_epi64(vd, mullo_epi64(vs, vf)));
    }
    for (; i < n; ++i) {
        dst[i] += factor * src[i];
    }
}

} // namespace

const KernelTable* avx2_kernels() noexcept
{
    static const KernelTable table{add_avx2, accumulate_avx2, axpy_avx2};
    return &table;
}

} // namespace isospec::simd

#else

namespace isospec::simd {
const KernelTable* avx2_kernels() noexcept { return nullptr; }
} // namespace isospec::simd

#endif
