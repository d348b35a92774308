#include <atomic>
#include <cstdlib>
#include <string>

#include "isospec/error.hpp"
#include "isospec/simd/kernels.hpp"

namespace isospec::simd {

std::string_view to_string(Backend backend) noexcept
{
    switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
    }
    return "unknown";
}

bool backend_supported(Backend backend) noexcept
{
    switch (backend) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
#if defined(__x86_64__)
        return avx2_kernels() != nullptr && __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Backend::Neon:
        return neon_kernels() != nullptr;
    }
    return false;
}

namespace {

const KernelTable* table_for(Backend backend) noexcept
{
    switch (backend) {
    case Backend::Avx2: return avx2_kernels();
    case Backend::Neon: return neon_kernels();
    case Backend::Scalar: break;
    }
    return &scalar_kernels();
}

Backend detect() noexcept
{
    if (const char* env = std::getenv("ISOSPEC_SIMD")) {
        const std::string_view want(env);
        for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
            if (want == to_string(b) && backend_supported(b)) {
                return b;
            }
        }
    }
    if (backend_supported(Backend::Avx2)) {
        return Backend::Avx2;
    }
    if (backend_supported(Backend::Neon)) {
        return Backend::Neon;
    }
    return Backend::Scalar;
}

struct State {
    std::atomic<Backend> backend{detect()};
    std::atomic<const KernelTable*> table{table_for(backend.load())};
};

State& state() noexcept
{
    static State s;
    return s;
}

const KernelTable& active() noexcept { return *state().table.load(std::memory_order_relaxed); }

} // namespace

Backend active_backend() noexcept { return state().backend.load(); }

void set_backend(Backend backend)
{
    if (!backend_supported(backend)) {
        throw Error(ErrorCode::InvalidArgument,
                    "SIMD backend '" + std::string(to_string(backend)) + "' is not available");
    }
    state().backend.store(backend);
    state().table.store(table_for(backend));
}

void add(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
         std::span<const std::uint64_t> b)
{
    active().add(dst.data(), a.data(), b.data(), dst.size());
}

void accumulate(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src)
{
    active().accumulate(dst.data(), src.data(), dst.size());
}

void axpy(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t factor)
{
    active().axpy(dst.data(), src.data(), factor, dst.size());
}

void rotate_accumulate(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                       std::size_t shift)
{
    const std::size_t n = dst.size();
    if (n == 0) {
        return;
    }
    shift %= n;
    const auto& k = active();
    // src[0 .. n-shift) lands at dst[shift ..), the tail wraps to dst[0 ..).
    k.accumulate(dst.data() + shift, src.data(), n - shift);
    k.accumulate(dst.data(), src.data() + (n - shift), shift);
}

} // namespace isospec::simd
