#include <doctest.h>

#include <random>
#include <vector>

#include "isospec/simd/kernels.hpp"
#include "isospec/spectrum.hpp"
#include "isospec/theta.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace isospec;

namespace {

std::vector<const simd::KernelTable*> vector_tables()
{
    std::vector<const simd::KernelTable*> out;
    if (simd::backend_supported(simd::Backend::Avx2)) {
        out.push_back(simd::avx2_kernels());
    }
    if (simd::backend_supported(simd::Backend::Neon)) {
        out.push_back(simd::neon_kernels());
    }
    return out;
}

std::vector<simd::Backend> supported_backends()
{
    std::vector<simd::Backend> out;
    for (const auto b : {simd::Backend::Scalar, simd::Backend::Avx2, simd::Backend::Neon}) {
        if (simd::backend_supported(b)) {
            out.push_back(b);
        }
    }
    return out;
}

// Restores the dispatch target when a test case ends.
struct BackendGuard {
    simd::Backend saved = simd::active_backend();
    ~BackendGuard() { simd::set_backend(saved); }
};

} // namespace

TEST_SUITE("simd") {

TEST_CASE("vector kernels match the scalar reference bit for bit")
{
    std::mt19937_64 rng(41);
    const auto& ref = simd::scalar_kernels();
    for (const auto* table : vector_tables()) {
        // Lengths around the vector width and its multiples, including tails.
        for (std::size_t len : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 101, 1000}) {
            std::vector<std::uint64_t> a(len), b(len);
            for (std::size_t i = 0; i < len; ++i) {
                a[i] = rng();
                b[i] = rng();
            }
            const std::uint64_t factor = rng();
            std::vector<std::uint64_t> x(len), y(len);
            ref.add(x.data(), a.data(), b.data(), len);
            table->add(y.data(), a.data(), b.data(), len);
            CHECK(x == y);
            x = a;
            y = a;
            ref.accumulate(x.data(), b.data(), len);
            table->accumulate(y.data(), b.data(), len);
            CHECK(x == y);
            x = a;
            y = a;
            ref.axpy(x.data(), b.data(), factor, len);
            table->axpy(y.data(), b.data(), factor, len);
            CHECK(x == y);
        }
    }
}

TEST_CASE("rotate_accumulate is a cyclic shift-add on every backend")
{
    BackendGuard guard;
    std::mt19937_64 rng(43);
    for (const auto backend : supported_backends()) {
        simd::set_backend(backend);
        for (std::size_t len : {1, 2, 5, 8, 13, 64}) {
            std::vector<std::uint64_t> src(len), dst(len);
            for (std::size_t i = 0; i < len; ++i) {
                src[i] = rng() % 1000;
                dst[i] = rng() % 1000;
            }
            for (std::size_t shift = 0; shift < len; ++shift) {
                auto got = dst;
                simd::rotate_accumulate(got, src, shift);
                auto want = dst;
                for (std::size_t i = 0; i < len; ++i) {
                    want[(i + shift) % len] += src[i];
                }
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("theta series do not depend on the backend")
{
    BackendGuard guard;
    std::mt19937_64 rng(47);
    std::vector<CongruenceLattice> lattices;
    for (const auto& space : props::small_spaces()) {
        for (std::int64_t q : {1, 5, 8, 12}) {
            const auto s = oracle::random_parameters(props::kind_of(space.family().kind), q, space.n, rng);
            lattices.push_back(lattice_for(space, {q, s, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q))}));
        }
    }
    simd::set_backend(simd::Backend::Scalar);
    std::vector<ThetaSeries> reference;
    for (const auto& L : lattices) {
        reference.push_back(theta_truncated(L, 60));
    }
    for (const auto backend : supported_backends()) {
        simd::set_backend(backend);
        CAPTURE(simd::to_string(backend));
        for (std::size_t i = 0; i < lattices.size(); ++i) {
            CHECK(theta_truncated(lattices[i], 60) == reference[i]);
        }
    }
}

TEST_CASE("backend selection")
{
    BackendGuard guard;
    CHECK(simd::backend_supported(simd::Backend::Scalar));
    simd::set_backend(simd::Backend::Scalar);
    CHECK(simd::active_backend() == simd::Backend::Scalar);
    for (const auto b : {simd::Backend::Avx2, simd::Backend::Neon}) {
        if (!simd::backend_supported(b)) {
            CHECK_THROWS(simd::set_backend(b));
        }
    }
    CHECK(simd::to_string(simd::Backend::Avx2) == "avx2");
}

} // TEST_SUITE
