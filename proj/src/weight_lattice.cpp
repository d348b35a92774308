#include "isospec/weight_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "isospec/bigint.hpp"
#include "isospec/error.hpp"

namespace isospec {

GroupFamily GroupFamily::make(FamilyKind kind, int n)
{
    if (n < 1) {
        throw Error(ErrorCode::InvalidFamily, "rank must be at least 1");
    }
    if (kind == FamilyKind::C2 && n != 2) {
        throw Error(ErrorCode::InvalidFamily, "family C2 has rank 2");
    }
    return GroupFamily{kind, n};
}

std::string to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::A: return "A";
    case FamilyKind::B: return "B";
    case FamilyKind::C2: return "C2";
    case FamilyKind::D: return "D";
    }
    return "?";
}

std::string to_string(const GroupFamily& family)
{
    if (family.kind == FamilyKind::C2) {
        return "C2";
    }
    return to_string(family.kind) + std::to_string(family.n);
}

FamilyKind parse_family_kind(std::string_view text)
{
    if (text == "A" || text == "a") return FamilyKind::A;
    if (text == "B" || text == "b") return FamilyKind::B;
    if (text == "C2" || text == "c2" || text == "C" || text == "c") return FamilyKind::C2;
    if (text == "D" || text == "d") return FamilyKind::D;
    throw Error(ErrorCode::InvalidFamily, "unknown family '" + std::string(text) + "'");
}

std::int64_t norm(const Weight& w, Norm which)
{
    std::int64_t acc = 0;
    for (std::int64_t a : w.coords) {
        const std::int64_t m = a < 0 ? checked_mul(a, -1) : a;
        switch (which) {
        case Norm::One: acc = checked_add(acc, m); break;
        case Norm::Two: acc = checked_add(acc, checked_mul(m, m)); break;
        case Norm::Inf: acc = std::max(acc, m); break;
        }
    }
    return acc;
}

Norm default_norm(const GroupFamily& family) noexcept
{
    return family.kind == FamilyKind::C2 ? Norm::Inf : Norm::One;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) noexcept
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd_of(std::int64_t q, std::span<const std::int64_t> values) noexcept
{
    std::int64_t g = std::abs(q);
    for (std::int64_t v : values) {
        g = std::gcd(g, std::abs(v));
    }
    return g;
}

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) noexcept
{
    const __int128 p = static_cast<__int128>(a) * b;
    __int128 r = p % m;
    if (r < 0) {
        r += m;
    }
    return static_cast<std::int64_t>(r);
}

// Validated exponent list of length exponent_count(), reduced mod q.
std::vector<std::int64_t> normalized_exponents(const GroupFamily& family, std::int64_t q,
                                               std::span<const std::int64_t> s)
{
    if (q < 1) {
        throw Error(ErrorCode::ZeroOrder, "group order q must be positive");
    }
    std::vector<std::int64_t> out;
    out.reserve(family.exponent_count());
    for (std::int64_t v : s) {
        out.push_back(mod_floor(v, q));
    }
    const auto n = static_cast<std::size_t>(family.n);
    if (family.kind == FamilyKind::A) {
        if (out.size() == n) {
            std::int64_t total = 0;
            for (std::int64_t v : out) {
                total = mod_floor(total + v, q);
            }
            out.push_back(mod_floor(-total, q));
        } else if (out.size() == n + 1) {
            std::int64_t total = 0;
            for (std::int64_t v : out) {
                total = mod_floor(total + v, q);
            }
            if (total != 0) {
                throw Error(ErrorCode::DimensionMismatch,
                            "the n+1 exponents of a family-A subgroup must sum to 0 mod q");
            }
        } else {
            throw Error(ErrorCode::DimensionMismatch, "family A expects n or n+1 exponents");
        }
    } else if (out.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(n) + " exponents");
    }
    if (gcd_of(q, out) != 1) {
        throw Error(ErrorCode::GcdViolation, "gcd(q, s) must be 1");
    }
    return out;
}

std::vector<std::int64_t> scaled_sorted(const GroupFamily& family, std::int64_t q,
                                        std::span<const std::int64_t> exps, std::int64_t ell)
{
    std::vector<std::int64_t> v;
    v.reserve(exps.size());
    for (std::int64_t e : exps) {
        std::int64_t r = mulmod(ell, e, q);
        if (family.has_sign_symmetry()) {
            r = std::min(r, q - r);
        }
        v.push_back(r);
    }
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

std::vector<std::int64_t> exponents(const GroupFamily& family, std::int64_t q,
                                    std::span<const std::int64_t> s)
{
    return normalized_exponents(family, q, s);
}

CongruenceLattice CongruenceLattice::make(const GroupFamily& family, CyclicParams params,
                                          bool even_sublattice)
{
    GroupFamily::make(family.kind, family.n);
    if (even_sublattice && family.kind != FamilyKind::C2) {
        throw Error(ErrorCode::IllegalEvenSublattice, "the D2 intersection is only defined for C2");
    }
    CongruenceLattice lattice;
    lattice.family_ = family;
    lattice.exponents_ = normalized_exponents(family, params.q, params.s);
    lattice.params_.q = params.q;
    lattice.params_.s.assign(lattice.exponents_.begin(), lattice.exponents_.begin() + family.n);
    lattice.params_.u = mod_floor(params.u, params.q);
    lattice.even_ = even_sublattice;
    return lattice;
}

CongruenceLattice CongruenceLattice::with_character(std::int64_t u) const
{
    CongruenceLattice copy = *this;
    copy.params_.u = mod_floor(u, params_.q);
    return copy;
}

CongruenceLattice CongruenceLattice::with_even_sublattice(bool even) const
{
    if (even && family_.kind != FamilyKind::C2) {
        throw Error(ErrorCode::IllegalEvenSublattice, "the D2 intersection is only defined for C2");
    }
    CongruenceLattice copy = *this;
    copy.even_ = even;
    return copy;
}

std::int64_t CongruenceLattice::residue(std::span<const std::int64_t> coords) const noexcept
{
    const std::int64_t q = params_.q;
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        acc = mod_floor(acc + mulmod(mod_floor(coords[i], q), exponents_[i], q), q);
    }
    return acc;
}

bool CongruenceLattice::contains(const Weight& w) const
{
    if (w.coords.size() != family_.ambient_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "weight length does not match the family");
    }
    if (family_.kind == FamilyKind::A) {
        std::int64_t total = 0;
        for (std::int64_t a : w.coords) {
            total = checked_add(total, a);
        }
        if (total != 0) {
            throw Error(ErrorCode::DimensionMismatch, "family-A weights must sum to zero");
        }
    }
    if (even_ && mod_floor(w.coords[0] + w.coords[1], 2) != 0) {
        return false;
    }
    return residue(w.coords) == params_.u;
}

CodeLattice CodeLattice::make(int n, const std::vector<std::vector<int>>& generators)
{
    if (n < 1 || n > 24) {
        throw Error(ErrorCode::InvalidArgument, "code length must be in [1, 24]");
    }
    std::vector<std::uint32_t> basis;
    for (const auto& g : generators) {
        if (g.size() != static_cast<std::size_t>(n)) {
            throw Error(ErrorCode::DimensionMismatch, "code generator has the wrong length");
        }
        std::uint32_t mask = 0;
        for (int i = 0; i < n; ++i) {
            if (g[i] != 0 && g[i] != 1) {
                throw Error(ErrorCode::InvalidArgument, "code generators must be binary");
            }
            mask |= static_cast<std::uint32_t>(g[i]) << i;
        }
        basis.push_back(mask);
    }
    CodeLattice code;
    code.n_ = n;
    code.member_.assign(std::size_t{1} << n, false);
    code.member_[0] = true;
    std::vector<std::uint32_t> words{0};
    for (std::uint32_t g : basis) {
        if (code.member_[g]) {
            continue;
        }
        const std::size_t count = words.size();
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint32_t w = words[i] ^ g;
            code.member_[w] = true;
            words.push_back(w);
        }
    }
    std::sort(words.begin(), words.end());
    code.words_ = std::move(words);
    return code;
}

bool CodeLattice::contains_word(std::uint32_t mask) const noexcept
{
    return mask < member_.size() && member_[mask];
}

bool CodeLattice::contains(const Weight& w) const
{
    if (w.coords.size() != static_cast<std::size_t>(n_)) {
        throw Error(ErrorCode::DimensionMismatch, "weight length does not match the code length");
    }
    std::uint32_t mask = 0;
    for (int i = 0; i < n_; ++i) {
        mask |= static_cast<std::uint32_t>(mod_floor(w.coords[i], 2)) << i;
    }
    return contains_word(mask);
}

CodeLattice CodeLattice::dual() const
{
    std::vector<std::vector<int>> gens;
    for (std::uint32_t w = 0; w < (std::uint32_t{1} << n_); ++w) {
        bool orthogonal = true;
        for (std::uint32_t c : words_) {
            if (__builtin_popcount(w & c) % 2 != 0) {
                orthogonal = false;
                break;
            }
        }
        if (orthogonal) {
            std::vector<int> bits(n_);
            for (int i = 0; i < n_; ++i) {
                bits[i] = static_cast<int>((w >> i) & 1u);
            }
            gens.push_back(std::move(bits));
        }
    }
    return make(n_, gens);
}

bool membership(const CongruenceLattice& lattice, const Weight& w) { return lattice.contains(w); }
bool membership(const CodeLattice& lattice, const Weight& w) { return lattice.contains(w); }

std::vector<std::int64_t> units_mod(std::int64_t q)
{
    std::vector<std::int64_t> units;
    for (std::int64_t l = 0; l < q; ++l) {
        if (std::gcd(l, q) == 1) {
            units.push_back(l);
        }
    }
    return units;
}

std::vector<std::int64_t> canonical_form(const GroupFamily& family, std::int64_t q,
                                         std::span<const std::int64_t> s)
{
    const auto exps = normalized_exponents(family, q, s);
    std::vector<std::int64_t> best;
    for (std::int64_t ell : units_mod(q)) {
        auto candidate = scaled_sorted(family, q, exps, ell);
        if (best.empty() || candidate < best) {
            best = std::move(candidate);
        }
    }
    return best;
}

bool is_conjugate(const GroupFamily& family, std::int64_t q, std::span<const std::int64_t> s,
                  std::span<const std::int64_t> s_other)
{
    const auto a = normalized_exponents(family, q, s);
    const auto b = normalized_exponents(family, q, s_other);
    const auto target = scaled_sorted(family, q, a, 1 % q);
    for (std::int64_t ell : units_mod(q)) {
        if (scaled_sorted(family, q, b, ell) == target) {
            return true;
        }
    }
    return false;
}

namespace {

void enumerate_sorted(std::vector<std::int64_t>& current, std::size_t length, std::int64_t lo,
                      std::int64_t hi, const auto& visit)
{
    if (current.size() == length) {
        visit(current);
        return;
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
        current.push_back(v);
        enumerate_sorted(current, length, v, hi, visit);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::int64_t>> enumerate_representatives(const GroupFamily& family,
                                                                 std::int64_t q)
{
    if (q < 1) {
        throw Error(ErrorCode::ZeroOrder, "group order q must be positive");
    }
    std::vector<std::vector<std::int64_t>> reps;
    const std::size_t length = family.exponent_count();
    const std::int64_t hi = family.has_sign_symmetry() ? q / 2 : q - 1;
    std::vector<std::int64_t> current;
    current.reserve(length);
    enumerate_sorted(current, length, 0, hi, [&](const std::vector<std::int64_t>& v) {
        if (family.kind == FamilyKind::A) {
            std::int64_t total = 0;
            for (std::int64_t x : v) {
                total = mod_floor(total + x, q);
            }
            if (total != 0) {
                return;
            }
        }
        if (gcd_of(q, v) != 1) {
            return;
        }
        if (canonical_form(family, q, v) == v) {
            reps.push_back(v);
        }
    });
    return reps;
}

bool is_manifold(const GroupFamily& family, std::int64_t q, std::span<const std::int64_t> s)
{
    if (q == 1) {
        return true;
    }
    if (family.kind != FamilyKind::D) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [q](std::int64_t v) { return std::gcd(v, q) == 1; });
}

std::vector<std::int64_t> singularity_profile(std::int64_t q, std::span<const std::int64_t> s)
{
    std::vector<std::int64_t> out;
    out.reserve(s.size());
    for (std::int64_t v : s) {
        out.push_back(std::gcd(mod_floor(v, q), q));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace isospec
