#include "isospec/theta.hpp"

#include "isospec/cyclotomic.hpp"
#include "isospec/error.hpp"
#include "shell_dp.hpp"

namespace isospec {

namespace {

std::vector<BigInt> widen(const std::vector<std::uint64_t>& counts)
{
    return {counts.begin(), counts.end()};
}

void require_terms(std::size_t terms)
{
    if (terms < 1) {
        throw Error(ErrorCode::InvalidArgument, "theta truncation needs at least one term");
    }
}

} // namespace

BigInt shell_count(const CongruenceLattice& lattice, std::int64_t k, Norm which)
{
    return detail::enumerate_shells(lattice, which, k).back();
}

BigInt shell_count(const CodeLattice& lattice, std::int64_t k, Norm which)
{
    return detail::enumerate_shells(lattice, which, k).back();
}

ThetaSeries theta_truncated(const CongruenceLattice& lattice, std::size_t terms, ThetaEngine engine)
{
    require_terms(terms);
    const GroupFamily& family = lattice.family();
    ThetaSeries theta{family, {}};
    const auto& exps = lattice.exponents();
    const bool su = family.kind == FamilyKind::A;
    if (engine == ThetaEngine::Enumerate) {
        const auto radius = static_cast<std::int64_t>(su ? 2 * (terms - 1) : terms - 1);
        const auto counts = detail::enumerate_shells(lattice, default_norm(family), radius);
        theta.coeffs.reserve(terms);
        for (std::size_t k = 0; k < terms; ++k) {
            theta.coeffs.emplace_back(counts[su ? 2 * k : k]);
        }
        return theta;
    }
    switch (family.kind) {
    case FamilyKind::A:
        theta.coeffs = detail::zero_sum_shells(exps, lattice.q(), lattice.u(), terms);
        break;
    case FamilyKind::B:
    case FamilyKind::D:
        theta.coeffs = detail::one_norm_shells(exps, lattice.q(), lattice.u(), terms);
        break;
    case FamilyKind::C2:
        theta.coeffs = detail::max_norm_shells(exps, lattice.q(), lattice.u(),
                                               lattice.even_sublattice(), terms);
        break;
    }
    return theta;
}

ThetaSeries theta_truncated(const CodeLattice& lattice, std::size_t terms, Norm which,
                            ThetaEngine engine)
{
    require_terms(terms);
    ThetaSeries theta{GroupFamily::make(FamilyKind::D, lattice.n()), {}};
    if (engine == ThetaEngine::Enumerate) {
        theta.coeffs = widen(detail::enumerate_shells(lattice, which, static_cast<std::int64_t>(terms) - 1));
    } else {
        theta.coeffs = detail::code_shells(lattice, which, terms);
    }
    return theta;
}

std::vector<BigInt> cumulative_counts(const ThetaSeries& theta)
{
    std::vector<BigInt> out;
    out.reserve(theta.coeffs.size());
    BigInt running = 0;
    for (const auto& c : theta.coeffs) {
        running += c;
        out.push_back(running);
    }
    return out;
}

std::vector<BigInt> RationalForm::expand(std::size_t terms) const
{
    const BigPoly num = poly_mul(binomial_power(1, 1), numerator);
    return series_divide(num, binomial_power(q, n + 1), terms);
}

RationalForm ehrhart_form_from_theta(const ThetaSeries& theta, std::int64_t q)
{
    const int n = theta.family.n;
    RationalForm form{q, n, {}};
    const std::size_t length = form.numerator_length();
    if (theta.terms() < length) {
        throw Error(ErrorCode::InvalidArgument, "theta series too short for the rational form");
    }
    const auto phi = cumulative_counts(theta);
    form.numerator.assign(length, BigInt(0));
    for (std::int64_t l0 = 0; l0 <= n; ++l0) {
        for (std::int64_t k0 = 0; k0 < q; ++k0) {
            BigInt h = 0;
            for (std::int64_t j = 0; j <= l0; ++j) {
                const BigInt term = binomial(n + 1, j) * phi[static_cast<std::size_t>(k0 + q * (l0 - j))];
                h += (j % 2 == 0) ? term : BigInt(-term);
            }
            form.numerator[static_cast<std::size_t>(k0 + l0 * q)] = std::move(h);
        }
    }
    return form;
}

RationalForm ehrhart_form(const CongruenceLattice& lattice)
{
    if (lattice.u() != 0) {
        throw Error(ErrorCode::AffineUnsupported,
                    "the rational form is only available for u = 0");
    }
    const auto terms = static_cast<std::size_t>((lattice.family().n + 1) * lattice.q());
    return ehrhart_form_from_theta(theta_truncated(lattice, terms), lattice.q());
}

std::vector<BigInt> cyclotomic_character_sum(std::int64_t q, std::span<const std::int64_t> s,
                                             int power, std::size_t terms)
{
    if (q < 1) {
        throw Error(ErrorCode::ZeroOrder, "q must be positive");
    }
    if (gcd_of(q, s) != 1) {
        throw Error(ErrorCode::GcdViolation, "gcd(q, s) must be 1");
    }
    require_terms(terms);
    using Element = CyclotomicRing::Element;
    const CyclotomicRing ring(q);
    const std::size_t n = s.size();
    std::vector<Element> total(terms, ring.zero());
    for (std::int64_t l = 0; l < q; ++l) {
        // D_l(z) = prod_j (1 - c_j z + z^2), c_j = xi^{l s_j} + xi^{-l s_j}
        std::vector<Element> den{ring.one()};
        for (const std::int64_t sj : s) {
            const Element c = ring.add(ring.root_power(l * sj), ring.root_power(-l * sj));
            std::vector<Element> next(den.size() + 2, ring.zero());
            for (std::size_t i = 0; i < den.size(); ++i) {
                next[i] = ring.add(next[i], den[i]);
                next[i + 1] = ring.sub(next[i + 1], ring.mul(c, den[i]));
                next[i + 2] = ring.add(next[i + 2], den[i]);
            }
            den = std::move(next);
        }
        // 1 / D_l(z) as a power series; D_l(0) = 1.
        std::vector<Element> inv(terms, ring.zero());
        inv[0] = ring.one();
        for (std::size_t m = 1; m < terms; ++m) {
            Element acc = ring.zero();
            for (std::size_t i = 1; i <= std::min(m, 2 * n); ++i) {
                acc = ring.sub(acc, ring.mul(den[i], inv[m - i]));
            }
            inv[m] = std::move(acc);
        }
        for (std::size_t m = 0; m < terms; ++m) {
            total[m] = ring.add(total[m], inv[m]);
        }
    }
    std::vector<BigInt> sum(terms);
    for (std::size_t m = 0; m < terms; ++m) {
        CyclotomicRing::Coeff value = 0;
        if (!ring.as_integer(total[m], value) || value % q != 0) {
            throw Error(ErrorCode::NonIntegralCoefficient,
                        "character sum did not reduce to an integer multiple of q");
        }
        value /= q;
        // BigInt has no __int128 constructor; split into two 64-bit halves.
        const bool negative = value < 0;
        const unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                               : static_cast<unsigned __int128>(value);
        BigInt big = static_cast<std::uint64_t>(mag >> 64);
        big <<= 64;
        big += static_cast<std::uint64_t>(mag);
        sum[m] = negative ? BigInt(-big) : big;
    }
    const BigPoly factor = binomial_power(2, power);
    std::vector<BigInt> out(terms, BigInt(0));
    for (std::size_t m = 0; m < terms; ++m) {
        for (std::size_t j = 0; j < factor.size() && j <= m; ++j) {
            if (factor[j] != 0) {
                out[m] += factor[j] * sum[m - j];
            }
        }
    }
    return out;
}

ThetaSeries zagier_theta(std::int64_t q, std::span<const std::int64_t> s, std::size_t terms)
{
    const int n = static_cast<int>(s.size());
    return {GroupFamily::make(FamilyKind::D, n), cyclotomic_character_sum(q, s, n, terms)};
}

} // namespace isospec
