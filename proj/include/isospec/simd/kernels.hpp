#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Unsigned 64-bit row kernels used by the shell-counting dynamic programs.
// All arithmetic is modulo 2^64; callers bound their counts beforehand.
namespace isospec::simd {

enum class Backend { Scalar, Avx2, Neon };

std::string_view to_string(Backend backend) noexcept;

bool backend_supported(Backend backend) noexcept;

/// Backend used by the dispatching entry points. Chosen once from the CPU
/// (and the ISOSPEC_SIMD environment variable when set).
Backend active_backend() noexcept;

/// Overrides the dispatch target; throws if the backend is unavailable.
void set_backend(Backend backend);

// dst[i] = a[i] + b[i]
void add(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
         std::span<const std::uint64_t> b);

// dst[i] += src[i]
void accumulate(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

// dst[i] += factor * src[i]
void axpy(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t factor);

/// dst[(i + shift) mod n] += src[i], n = dst.size() = src.size().
void rotate_accumulate(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                       std::size_t shift);

/// Per-backend tables, exposed for equivalence testing.
struct KernelTable {
    void (*add)(std::uint64_t*, const std::uint64_t*, const std::uint64_t*, std::size_t);
    void (*accumulate)(std::uint64_t*, const std::uint64_t*, std::size_t);
    void (*axpy)(std::uint64_t*, const std::uint64_t*, std::uint64_t, std::size_t);
};

const KernelTable& scalar_kernels() noexcept;
/// nullptr when the backend was not compiled in.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

} // namespace isospec::simd
