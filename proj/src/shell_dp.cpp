#include "shell_dp.hpp"

#include <algorithm>
#include <cmath>

#include "isospec/error.hpp"
#include "isospec/simd/kernels.hpp"

namespace isospec::detail {

namespace {

using u64 = std::uint64_t;

struct U64Ops {
    using T = u64;

    static void add(T* dst, const T* a, const T* b, std::size_t n)
    {
        simd::add({dst, n}, {a, n}, {b, n});
    }
    static void accumulate(T* dst, const T* src, std::size_t n) { simd::accumulate({dst, n}, {src, n}); }
    static void rotate_accumulate(T* dst, const T* src, std::size_t n, std::size_t shift)
    {
        simd::rotate_accumulate({dst, n}, {src, n}, shift);
    }
    // dst[(i + shift) mod n] += factor * src[i]
    static void rotate_axpy(T* dst, const T* src, std::size_t n, std::size_t shift, T factor)
    {
        simd::axpy({dst + shift, n - shift}, {src, n - shift}, factor);
        if (shift != 0) {
            simd::axpy({dst, shift}, {src + (n - shift), shift}, factor);
        }
    }
};

struct BigOps {
    using T = BigInt;

    static void add(T* dst, const T* a, const T* b, std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i) {
            dst[i] = a[i] + b[i];
        }
    }
    static void accumulate(T* dst, const T* src, std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i) {
            dst[i] += src[i];
        }
    }
    static void rotate_accumulate(T* dst, const T* src, std::size_t n, std::size_t shift)
    {
        for (std::size_t i = 0; i < n; ++i) {
            dst[(i + shift) % n] += src[i];
        }
    }
    static void rotate_axpy(T* dst, const T* src, std::size_t n, std::size_t shift, const T& factor)
    {
        for (std::size_t i = 0; i < n; ++i) {
            dst[(i + shift) % n] += factor * src[i];
        }
    }
};

template <class T>
std::vector<BigInt> to_big(const std::vector<T>& values)
{
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        out.emplace_back(v);
    }
    return out;
}

std::size_t shift_of(std::int64_t e, std::int64_t q) { return static_cast<std::size_t>(mod_floor(e, q)); }

template <class Ops>
std::vector<typename Ops::T> one_norm_impl(std::span<const std::int64_t> exps, std::int64_t q,
                                           std::int64_t u, std::size_t terms)
{
    using T = typename Ops::T;
    const auto Q = static_cast<std::size_t>(q);
    const std::size_t K = terms;
    std::vector<T> cur(K * Q, T(0));
    std::vector<T> pos(K * Q), neg(K * Q), tmp(Q);
    cur[0] = 1;
    for (const std::int64_t e : exps) {
        const std::size_t up = shift_of(e, q);
        const std::size_t down = shift_of(-e, q);
        std::fill(pos.begin(), pos.end(), T(0));
        std::fill(neg.begin(), neg.end(), T(0));
        // pos[k] collects points whose new coordinate is positive, neg[k] negative.
        for (std::size_t k = 1; k < K; ++k) {
            Ops::add(tmp.data(), &cur[(k - 1) * Q], &pos[(k - 1) * Q], Q);
            Ops::rotate_accumulate(&pos[k * Q], tmp.data(), Q, up);
            Ops::add(tmp.data(), &cur[(k - 1) * Q], &neg[(k - 1) * Q], Q);
            Ops::rotate_accumulate(&neg[k * Q], tmp.data(), Q, down);
        }
        Ops::accumulate(cur.data(), pos.data(), cur.size());
        Ops::accumulate(cur.data(), neg.data(), cur.size());
    }
    std::vector<T> out(K);
    for (std::size_t k = 0; k < K; ++k) {
        out[k] = cur[k * Q + static_cast<std::size_t>(u)];
    }
    return out;
}

template <class Ops>
std::vector<typename Ops::T> zero_sum_impl(std::span<const std::int64_t> exps, std::int64_t q,
                                           std::int64_t u, std::size_t terms)
{
    using T = typename Ops::T;
    const auto Q = static_cast<std::size_t>(q);
    const std::size_t K = terms;
    // cur[(p K + m) Q + r]: p = sum of positive parts, m = sum of negative parts.
    const std::size_t slab = K * Q;
    auto at = [&](std::size_t p, std::size_t m) { return (p * K + m) * Q; };
    std::vector<T> cur(K * slab, T(0));
    std::vector<T> pos(K * slab), neg(K * slab), tmp(slab);
    cur[0] = 1;
    for (const std::int64_t e : exps) {
        const std::size_t up = shift_of(e, q);
        const std::size_t down = shift_of(-e, q);
        std::fill(pos.begin(), pos.end(), T(0));
        std::fill(neg.begin(), neg.end(), T(0));
        for (std::size_t p = 1; p < K; ++p) {
            Ops::add(tmp.data(), &cur[at(p - 1, 0)], &pos[at(p - 1, 0)], slab);
            for (std::size_t m = 0; m < K; ++m) {
                Ops::rotate_accumulate(&pos[at(p, m)], &tmp[m * Q], Q, up);
            }
        }
        for (std::size_t m = 1; m < K; ++m) {
            for (std::size_t p = 0; p < K; ++p) {
                Ops::add(tmp.data(), &cur[at(p, m - 1)], &neg[at(p, m - 1)], Q);
                Ops::rotate_accumulate(&neg[at(p, m)], tmp.data(), Q, down);
            }
        }
        Ops::accumulate(cur.data(), pos.data(), cur.size());
        Ops::accumulate(cur.data(), neg.data(), cur.size());
    }
    std::vector<T> out(K);
    for (std::size_t k = 0; k < K; ++k) {
        out[k] = cur[at(k, k) + static_cast<std::size_t>(u)];
    }
    return out;
}

template <class Ops>
std::vector<typename Ops::T> max_norm_impl(std::span<const std::int64_t> exps, std::int64_t q,
                                           std::int64_t u, bool even_pair, std::size_t terms)
{
    using T = typename Ops::T;
    const auto Q = static_cast<std::size_t>(q);
    const std::size_t parities = even_pair ? 2 : 1;
    const std::size_t M = parities * Q; // index par * Q + r
    std::vector<T> cumulative(terms);
    std::vector<T> cur(M), next(M);
    std::vector<std::vector<T>> box(exps.size(), std::vector<T>(M, T(0)));
    for (std::size_t k = 0; k < terms; ++k) {
        const auto kk = static_cast<std::int64_t>(k);
        // Extend each per-coordinate residue histogram from [-(k-1), k-1] to [-k, k].
        for (std::size_t i = 0; i < exps.size(); ++i) {
            const bool tracked = even_pair && i < 2;
            for (const std::int64_t a : {kk, -kk}) {
                const std::size_t par = tracked ? static_cast<std::size_t>(a & 1) : 0;
                box[i][par * Q + shift_of(a * exps[i], q)] += 1;
                if (k == 0) {
                    break;
                }
            }
        }
        std::fill(cur.begin(), cur.end(), T(0));
        cur[0] = 1;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            std::fill(next.begin(), next.end(), T(0));
            for (std::size_t p2 = 0; p2 < parities; ++p2) {
                for (std::size_t r2 = 0; r2 < Q; ++r2) {
                    const T& c = box[i][p2 * Q + r2];
                    if (c == 0) {
                        continue;
                    }
                    for (std::size_t p1 = 0; p1 < parities; ++p1) {
                        Ops::rotate_axpy(&next[(p1 ^ p2) * Q], &cur[p1 * Q], Q, r2, c);
                    }
                }
            }
            std::swap(cur, next);
        }
        cumulative[k] = cur[static_cast<std::size_t>(u)];
    }
    std::vector<T> out(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        out[k] = k == 0 ? cumulative[0] : cumulative[k] - cumulative[k - 1];
    }
    return out;
}

template <class T>
std::vector<T> code_impl(const CodeLattice& lattice, Norm which, std::size_t terms)
{
    const auto n = static_cast<std::size_t>(lattice.n());
    const std::size_t W = std::size_t{1} << n;
    std::vector<T> out(terms, T(0));
    if (which == Norm::Inf) {
        // Box [-k, k]^n: per coordinate 2 floor(k/2) + 1 even values and the rest odd.
        std::vector<T> cumulative(terms, T(0));
        for (std::size_t k = 0; k < terms; ++k) {
            const T even = T(2 * (k / 2) + 1);
            const T odd = T(2 * k + 1) - even;
            for (const std::uint32_t w : lattice.words()) {
                T prod = 1;
                for (std::size_t i = 0; i < n; ++i) {
                    prod *= ((w >> i) & 1U) ? odd : even;
                }
                cumulative[k] += prod;
            }
            out[k] = k == 0 ? cumulative[0] : cumulative[k] - cumulative[k - 1];
        }
        return out;
    }
    // cur[t W + w]: points in the first i coordinates with norm t and parity word w.
    std::vector<T> cur(terms * W, T(0)), next(terms * W);
    cur[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t bit = std::size_t{1} << i;
        std::fill(next.begin(), next.end(), T(0));
        for (std::size_t t = 0; t < terms; ++t) {
            for (std::size_t a = 0;; ++a) {
                const std::size_t cost = which == Norm::One ? a : a * a;
                if (cost > t) {
                    break;
                }
                const T ways = a == 0 ? T(1) : T(2);
                const std::size_t flip = (a & 1U) ? bit : 0;
                const std::size_t from = (t - cost) * W;
                for (std::size_t w = 0; w < W; ++w) {
                    next[t * W + (w ^ flip)] += ways * cur[from + w];
                }
            }
        }
        std::swap(cur, next);
    }
    for (std::size_t t = 0; t < terms; ++t) {
        for (const std::uint32_t w : lattice.words()) {
            out[t] += cur[t * W + w];
        }
    }
    return out;
}

} // namespace

bool fits_u64(std::size_t dim, std::size_t radius) noexcept
{
    const long double bits = static_cast<long double>(dim) * std::log2(2.0L * radius + 1.0L);
    return bits < 62.0L;
}

std::vector<BigInt> one_norm_shells(std::span<const std::int64_t> exps, std::int64_t q,
                                    std::int64_t u, std::size_t terms)
{
    if (fits_u64(exps.size(), terms)) {
        return to_big(one_norm_impl<U64Ops>(exps, q, u, terms));
    }
    return one_norm_impl<BigOps>(exps, q, u, terms);
}

std::vector<BigInt> zero_sum_shells(std::span<const std::int64_t> exps, std::int64_t q,
                                    std::int64_t u, std::size_t terms)
{
    if (fits_u64(exps.size(), terms)) {
        return to_big(zero_sum_impl<U64Ops>(exps, q, u, terms));
    }
    return zero_sum_impl<BigOps>(exps, q, u, terms);
}

std::vector<BigInt> max_norm_shells(std::span<const std::int64_t> exps, std::int64_t q,
                                    std::int64_t u, bool even_pair, std::size_t terms)
{
    if (fits_u64(exps.size(), terms)) {
        return to_big(max_norm_impl<U64Ops>(exps, q, u, even_pair, terms));
    }
    return max_norm_impl<BigOps>(exps, q, u, even_pair, terms);
}

std::vector<BigInt> code_shells(const CodeLattice& lattice, Norm which, std::size_t terms)
{
    if (fits_u64(static_cast<std::size_t>(lattice.n()), terms)) {
        return to_big(code_impl<u64>(lattice, which, terms));
    }
    return code_impl<BigInt>(lattice, which, terms);
}

namespace {

std::int64_t combine(Norm which, std::int64_t partial, std::int64_t a) noexcept
{
    const std::int64_t m = a < 0 ? -a : a;
    switch (which) {
    case Norm::One: return partial + m;
    case Norm::Two: return partial + m * m;
    case Norm::Inf: return std::max(partial, m);
    }
    return partial;
}

std::int64_t coordinate_bound(Norm which, std::int64_t radius, std::int64_t partial) noexcept
{
    switch (which) {
    case Norm::One: return radius - partial;
    case Norm::Two: {
        auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(radius - partial)));
        while (r * r > radius - partial) {
            --r;
        }
        while ((r + 1) * (r + 1) <= radius - partial) {
            ++r;
        }
        return r;
    }
    case Norm::Inf: return radius;
    }
    return 0;
}

struct CongruenceWalk {
    Norm which;
    std::int64_t radius;
    std::int64_t q;
    std::int64_t u;
    bool even;
    bool zero_sum;
    std::vector<std::int64_t> exps;
    std::vector<std::uint64_t> counts;

    void leaf(std::int64_t total, std::int64_t res, std::int64_t parity)
    {
        if (total <= radius && res == u && (!even || parity == 0)) {
            ++counts[static_cast<std::size_t>(total)];
        }
    }

    void visit(std::size_t i, std::int64_t partial, std::int64_t res, std::int64_t parity,
               std::int64_t sum)
    {
        const std::size_t free = zero_sum ? exps.size() - 1 : exps.size();
        if (i == free) {
            if (zero_sum) {
                const std::int64_t last = -sum;
                const std::int64_t r = mod_floor(res + mod_floor(last, q) * exps[i], q);
                const std::int64_t p = i < 2 ? (parity ^ (last & 1)) : parity;
                leaf(combine(which, partial, last), r, p);
            } else {
                leaf(partial, res, parity);
            }
            return;
        }
        const std::int64_t bound = coordinate_bound(which, radius, partial);
        const std::int64_t step = exps[i];
        if (which == Norm::One && !zero_sum && i + 1 == free && !(even && i < 2)) {
            // Last free coordinate: walk +t and -t together with incremental residues.
            std::int64_t up = res;
            std::int64_t down = res;
            leaf(partial, res, parity);
            for (std::int64_t t = 1; t <= bound; ++t) {
                up += step;
                if (up >= q) {
                    up -= q;
                }
                down -= step;
                if (down < 0) {
                    down += q;
                }
                leaf(partial + t, up, parity);
                leaf(partial + t, down, parity);
            }
            return;
        }
        for (std::int64_t a = -bound; a <= bound; ++a) {
            const std::int64_t r = mod_floor(res + mod_floor(a, q) * step, q);
            const std::int64_t p = i < 2 ? (parity ^ (a & 1)) : parity;
            visit(i + 1, combine(which, partial, a), r, p, sum + a);
        }
    }
};

} // namespace

std::vector<std::uint64_t> enumerate_shells(const CongruenceLattice& lattice, Norm which,
                                            std::int64_t radius)
{
    if (radius < 0) {
        throw Error(ErrorCode::InvalidArgument, "shell radius must be non-negative");
    }
    CongruenceWalk walk{which,
                        radius,
                        lattice.q(),
                        lattice.u(),
                        lattice.even_sublattice(),
                        lattice.family().kind == FamilyKind::A,
                        lattice.exponents(),
                        std::vector<std::uint64_t>(static_cast<std::size_t>(radius) + 1, 0)};
    walk.visit(0, 0, 0, 0, 0);
    return walk.counts;
}

std::vector<std::uint64_t> enumerate_shells(const CodeLattice& lattice, Norm which,
                                            std::int64_t radius)
{
    if (radius < 0) {
        throw Error(ErrorCode::InvalidArgument, "shell radius must be non-negative");
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(radius) + 1, 0);
    const auto n = static_cast<std::size_t>(lattice.n());
    auto visit = [&](auto& self, std::size_t i, std::int64_t partial, std::uint32_t word) -> void {
        if (i == n) {
            if (lattice.contains_word(word)) {
                ++counts[static_cast<std::size_t>(partial)];
            }
            return;
        }
        const std::int64_t bound = coordinate_bound(which, radius, partial);
        for (std::int64_t a = -bound; a <= bound; ++a) {
            const std::uint32_t w = (a & 1) ? word ^ (1U << i) : word;
            self(self, i + 1, combine(which, partial, a), w);
        }
    };
    visit(visit, 0, 0, 0);
    return counts;
}

} // namespace isospec::detail
