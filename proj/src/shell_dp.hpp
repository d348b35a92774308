#pragma once

// Residue-class dynamic programs behind ThetaEngine::Fast. Each routine runs
// on unsigned 64-bit counts through the SIMD kernels when the count bound
// allows it, and on BigInt otherwise.

#include <cstdint>
#include <span>
#include <vector>

#include "isospec/bigint.hpp"
#include "isospec/weight_lattice.hpp"

namespace isospec::detail {

/// True when (2 radius + 1)^dim < 2^63, which bounds every DP cell.
bool fits_u64(std::size_t dim, std::size_t radius) noexcept;

/// N(k), k < terms, for {a in Z^m : sum a_i e_i == u mod q} in the one-norm.
std::vector<BigInt> one_norm_shells(std::span<const std::int64_t> exps, std::int64_t q,
                                    std::int64_t u, std::size_t terms);

/// N(2k), k < terms, for zero-sum a in Z^m with sum a_i e_i == u mod q.
std::vector<BigInt> zero_sum_shells(std::span<const std::int64_t> exps, std::int64_t q,
                                    std::int64_t u, std::size_t terms);

/// Max-norm N(k), k < terms; even_pair adds the condition a_1 + a_2 even.
std::vector<BigInt> max_norm_shells(std::span<const std::int64_t> exps, std::int64_t q,
                                    std::int64_t u, bool even_pair, std::size_t terms);

/// Shell counts of a code lattice (squared norm for Norm::Two).
std::vector<BigInt> code_shells(const CodeLattice& lattice, Norm which, std::size_t terms);

/// Brute-force shell counts for norms 0..radius by visiting every integer
/// point of the ball and testing membership.
std::vector<std::uint64_t> enumerate_shells(const CongruenceLattice& lattice, Norm which,
                                            std::int64_t radius);
std::vector<std::uint64_t> enumerate_shells(const CodeLattice& lattice, Norm which,
                                            std::int64_t radius);

} // namespace isospec::detail
