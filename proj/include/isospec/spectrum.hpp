#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "isospec/bigint.hpp"
#include "isospec/theta.hpp"
#include "isospec/weight_lattice.hpp"

namespace isospec {

enum class SpaceType { CPn, EvenSphere, HP1, OddSphere };

/// Compact symmetric space of real rank one covering the orbifold:
/// P^n(C) (family A), S^{2n} (B), P^1(H) (C2) or S^{2n-1} (D).
struct SpaceKind {
    SpaceType type = SpaceType::OddSphere;
    int n = 2;

    static SpaceKind make(SpaceType type, int n);

    GroupFamily family() const;
    /// Real dimension of the space.
    int dimension() const noexcept;
    /// CLI spelling: "cp:<n>", "s:<d>" or "hp1".
    std::string name() const;

    auto operator<=>(const SpaceKind&) const = default;
};

/// Parses "cp:<n>", "s:<d>" (d even gives S^{2n}, d odd gives S^{2n-1}) and "hp1".
SpaceKind parse_space(std::string_view text);

/// Congruence lattice whose shell counts govern the spectrum: L_{q,s,u}, or
/// D_2 intersected with it for P^1(H).
CongruenceLattice lattice_for(const SpaceKind& space, const CyclicParams& params);

/// lambda_k, the k-th eigenvalue of the Laplacian on the space.
std::int64_t eigenvalue(const SpaceKind& space, std::int64_t k);

/// Multiplicity of the weight mu in the k-th spherical representation.
BigInt weight_multiplicity(const GroupFamily& family, std::int64_t k, const Weight& mu);

/// Multiplicity of lambda_k in the spectrum of the twisted Laplacian.
/// For P^1(H) the lattice is intersected with D_2 when it is not already.
BigInt multiplicity(const CongruenceLattice& lattice, const SpaceKind& space, std::int64_t k);

/// Multiplicities of lambda_0 .. lambda_{levels-1} from shell counts.
std::vector<BigInt> multiplicities_from_theta(const SpaceKind& space, const ThetaSeries& theta,
                                              std::size_t levels);

struct SpectrumEntry {
    std::int64_t k = 0;
    std::int64_t eigenvalue = 0;
    BigInt multiplicity;

    bool operator==(const SpectrumEntry&) const = default;
};

struct SpectrumDescriptor {
    SpaceKind space;
    std::vector<SpectrumEntry> entries;

    bool operator==(const SpectrumDescriptor&) const = default;
};

SpectrumDescriptor spectrum_table(const CongruenceLattice& lattice, const SpaceKind& space,
                                  std::size_t levels);

/// F(z) = numerator / denominator, exact for u = 0.
struct SpectralRational {
    BigPoly numerator;
    BigPoly denominator; // constant term 1

    std::vector<BigInt> expand(std::size_t terms) const;
};

SpectralRational spectral_generating_function(const CongruenceLattice& lattice,
                                              const SpaceKind& space);

/// First `terms` coefficients of F(z) for any character, from the theta series.
std::vector<BigInt> spectral_generating_series(const CongruenceLattice& lattice,
                                               const SpaceKind& space, std::size_t terms);

/// Ikeda's closed form of F for the lens space Gamma_{q,s} \ S^{2n-1}.
std::vector<BigInt> ikeda_generating_series(std::int64_t q, std::span<const std::int64_t> s,
                                            std::size_t terms);

using HighPrecision = boost::multiprecision::cpp_bin_float_100;

/// sum_{k=1}^{levels-1} mult(lambda_k) lambda_k^{-exponent}.
HighPrecision zeta_partial(const CongruenceLattice& lattice, const SpaceKind& space,
                           const BigRational& exponent, std::size_t levels);

/// Sum of weight_multiplicity over all weights, i.e. dim pi_k via the closed formulas.
BigInt full_lattice_dimension(const GroupFamily& family, std::int64_t k);

/// dim pi_{k Lambda_0} from the Weyl dimension formula over the positive roots.
BigInt weyl_dimension(const GroupFamily& family, std::int64_t k);

} // namespace isospec
