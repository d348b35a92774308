#include "isospec/simd/kernels.hpp"

namespace isospec::simd {

namespace {

void add_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = a[i] + b[i];
    }
}

void accumulate_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] += src[i];
    }
}

void axpy_scalar(std::uint64_t* dst, const std::uint64_t* src, std::uint64_t factor, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] += factor * src[i];
    }
}

} // namespace

const KernelTable& scalar_kernels() noexcept
{
    static const KernelTable table{add_scalar, accumulate_scalar, axpy_scalar};
    return table;
}

} // namespace isospec::simd
