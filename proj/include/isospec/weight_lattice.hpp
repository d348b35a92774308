#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace isospec {

// Classical families with a closed weight-multiplicity formula for the
// spherical representations: SU(n+1), SO(2n+1), Sp(2), SO(2n).
enum class FamilyKind { A, B, C2, D };

struct GroupFamily {
    FamilyKind kind = FamilyKind::D;
    int n = 1;

    /// Validating constructor. C2 forces n == 2; every family needs n >= 1.
    static GroupFamily make(FamilyKind kind, int n);

    /// Length of a weight vector: n + 1 for A, n otherwise.
    std::size_t ambient_dim() const noexcept { return kind == FamilyKind::A ? n + 1 : n; }

    /// Number of rotation exponents s_j: n + 1 for A (including s_{n+1}), n otherwise.
    std::size_t exponent_count() const noexcept { return ambient_dim(); }

    bool has_sign_symmetry() const noexcept { return kind != FamilyKind::A; }

    auto operator<=>(const GroupFamily&) const = default;
};

std::string to_string(FamilyKind kind);
std::string to_string(const GroupFamily& family);
FamilyKind parse_family_kind(std::string_view text);

struct Weight {
    std::vector<std::int64_t> coords;

    auto operator<=>(const Weight&) const = default;
};

enum class Norm { One, Two, Inf };

/// One-norm, squared two-norm or max-norm. The two-norm is returned squared
/// so that it stays an exact integer.
std::int64_t norm(const Weight& w, Norm which);

/// Max-norm for C2, one-norm for the other families.
Norm default_norm(const GroupFamily& family) noexcept;

struct CyclicParams {
    std::int64_t q = 1;
    std::vector<std::int64_t> s; // length n, residues in [0, q)
    std::int64_t u = 0;          // residue in [0, q)

    auto operator<=>(const CyclicParams&) const = default;
};

std::int64_t mod_floor(std::int64_t a, std::int64_t m) noexcept;
std::int64_t gcd_of(std::int64_t q, std::span<const std::int64_t> values) noexcept;

/// Full exponent list for the family: appends s_{n+1} = -(s_1 + ... + s_n) mod q for A.
std::vector<std::int64_t> exponents(const GroupFamily& family, std::int64_t q,
                                    std::span<const std::int64_t> s);

/// Affine congruence lattice {mu : sum_i a_i s_i == u (mod q)}, optionally
/// intersected with D_2 = {a_1 + a_2 even} (C2 only).
class CongruenceLattice {
public:
    /// For family A, `params.s` may carry either n entries or the full n + 1
    /// exponents (whose sum must vanish mod q).
    static CongruenceLattice make(const GroupFamily& family, CyclicParams params,
                                  bool even_sublattice = false);

    const GroupFamily& family() const noexcept { return family_; }
    const CyclicParams& params() const noexcept { return params_; }
    std::int64_t q() const noexcept { return params_.q; }
    std::int64_t u() const noexcept { return params_.u; }
    const std::vector<std::int64_t>& s() const noexcept { return params_.s; }
    /// s extended by s_{n+1} for family A.
    const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }
    bool even_sublattice() const noexcept { return even_; }

    /// Same group, different character.
    CongruenceLattice with_character(std::int64_t u) const;
    /// Same data, D_2 intersection toggled (C2 only).
    CongruenceLattice with_even_sublattice(bool even) const;

    bool contains(const Weight& w) const;
    /// Residue of sum_i a_i s_i mod q; `w` must already have the ambient length.
    std::int64_t residue(std::span<const std::int64_t> coords) const noexcept;

    auto operator<=>(const CongruenceLattice&) const = default;

private:
    CongruenceLattice() = default;

    GroupFamily family_;
    CyclicParams params_;
    std::vector<std::int64_t> exponents_;
    bool even_ = false;
};

/// Preimage of a binary linear code under coordinatewise reduction mod 2.
class CodeLattice {
public:
    static CodeLattice make(int n, const std::vector<std::vector<int>>& generators);

    int n() const noexcept { return n_; }
    /// All codewords as bit masks (bit i = coordinate i), sorted ascending.
    const std::vector<std::uint32_t>& words() const noexcept { return words_; }
    bool contains_word(std::uint32_t mask) const noexcept;
    bool contains(const Weight& w) const;

    /// Dual code {w : w . g == 0 mod 2 for every codeword g}.
    CodeLattice dual() const;

private:
    int n_ = 0;
    std::vector<std::uint32_t> words_;
    std::vector<bool> member_;
};

bool membership(const CongruenceLattice& lattice, const Weight& w);
bool membership(const CodeLattice& lattice, const Weight& w);

// ---------------------------------------------------------------------------
// Conjugacy of cyclic subgroups Gamma_{q,s}.
//
// Canonical forms are sorted residue vectors. For A they hold all n + 1
// exponents in [0, q); for B/C2/D they hold n residues folded to
// [0, floor(q/2)] by r -> min(r, q - r). The canonical form is the
// lexicographically least such vector over all units l mod q.
// ---------------------------------------------------------------------------

std::vector<std::int64_t> canonical_form(const GroupFamily& family, std::int64_t q,
                                         std::span<const std::int64_t> s);

bool is_conjugate(const GroupFamily& family, std::int64_t q, std::span<const std::int64_t> s,
                  std::span<const std::int64_t> s_other);

/// One canonical representative per conjugacy class of order-q cyclic
/// subgroups of the maximal torus, sorted lexicographically.
std::vector<std::vector<std::int64_t>> enumerate_representatives(const GroupFamily& family,
                                                                 std::int64_t q);

/// Free action of Gamma_{q,s}: only the odd sphere (family D) admits it for q > 1.
bool is_manifold(const GroupFamily& family, std::int64_t q, std::span<const std::int64_t> s);

/// Sorted multiset {gcd(s_i, q)}.
std::vector<std::int64_t> singularity_profile(std::int64_t q, std::span<const std::int64_t> s);

/// Units l in [0, q) with gcd(l, q) = 1 (for q = 1 this is {0}).
std::vector<std::int64_t> units_mod(std::int64_t q);

} // namespace isospec
