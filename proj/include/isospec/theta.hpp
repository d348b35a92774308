#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isospec/bigint.hpp"
#include "isospec/weight_lattice.hpp"

namespace isospec {

/// Truncated generating theta function of a weight set.
///
/// coeffs[k] counts members of norm k, except for family A where it counts
/// members of one-norm 2k (the one-norm of a zero-sum vector is even).
struct ThetaSeries {
    GroupFamily family;
    std::vector<BigInt> coeffs;

    std::size_t terms() const noexcept { return coeffs.size(); }
    bool operator==(const ThetaSeries&) const = default;
};

enum class ThetaEngine {
    Fast,      // residue-class dynamic program over coordinates
    Enumerate, // shell-by-shell enumeration of all integer points
};

/// Number of lattice members with norm exactly k, by enumerating every
/// integer point of the shell and testing membership. For the two-norm, k is
/// the squared norm.
BigInt shell_count(const CongruenceLattice& lattice, std::int64_t k, Norm which);
BigInt shell_count(const CodeLattice& lattice, std::int64_t k, Norm which);

/// First `terms` coefficients of the theta series in the family's default norm.
ThetaSeries theta_truncated(const CongruenceLattice& lattice, std::size_t terms,
                            ThetaEngine engine = ThetaEngine::Fast);

/// Shell counts of a code lattice: coefficient k counts members of norm k
/// (squared norm for Norm::Two).
ThetaSeries theta_truncated(const CodeLattice& lattice, std::size_t terms, Norm which,
                            ThetaEngine engine = ThetaEngine::Fast);

/// Cumulative counts Phi(k) = sum_{m <= k} coeffs[m].
std::vector<BigInt> cumulative_counts(const ThetaSeries& theta);

/// theta(z) = (1 - z) p(z) / (1 - z^q)^(rank + 1) with deg p < (rank + 1) q.
struct RationalForm {
    std::int64_t q = 1;
    int n = 1; // rank of the lattice
    BigPoly numerator;

    /// Series expansion of the rational form.
    std::vector<BigInt> expand(std::size_t terms) const;
    std::size_t numerator_length() const noexcept
    {
        return static_cast<std::size_t>((n + 1) * q);
    }
};

/// Exact numerator of the theta series of an untwisted lattice (u must be 0).
RationalForm ehrhart_form(const CongruenceLattice& lattice);

/// Same, from an already computed theta series with at least (n+1) q terms.
RationalForm ehrhart_form_from_theta(const ThetaSeries& theta, std::int64_t q);

/// theta of L_{q,s,0} in Z^n (one-norm) from the finite character sum
///   (1 - z^2)^n / q * sum_l prod_j 1 / ((z - xi^{l s_j})(z - xi^{-l s_j})),
/// evaluated in exact cyclotomic arithmetic. Throws NonIntegralCoefficient
/// if the character sum does not collapse to integers.
ThetaSeries zagier_theta(std::int64_t q, std::span<const std::int64_t> s, std::size_t terms);

/// (1 - z^2)^power / q * sum_l prod_j ((z - xi^{l s_j})(z - xi^{-l s_j}))^{-1}
/// as an integer series. zagier_theta is the case power = n; power = 1 gives
/// Ikeda's generating function of the lens space.
std::vector<BigInt> cyclotomic_character_sum(std::int64_t q, std::span<const std::int64_t> s,
                                             int power, std::size_t terms);

} // namespace isospec
