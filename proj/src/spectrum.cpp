#include "isospec/spectrum.hpp"

#include <charconv>

#include "isospec/error.hpp"

namespace isospec {

SpaceKind SpaceKind::make(SpaceType type, int n)
{
    if (type == SpaceType::HP1) {
        n = 2;
    }
    const int least = (type == SpaceType::OddSphere) ? 2 : 1;
    if (n < least) {
        throw Error(ErrorCode::InvalidArgument, "space rank too small");
    }
    return SpaceKind{type, n};
}

GroupFamily SpaceKind::family() const
{
    switch (type) {
    case SpaceType::CPn: return GroupFamily::make(FamilyKind::A, n);
    case SpaceType::EvenSphere: return GroupFamily::make(FamilyKind::B, n);
    case SpaceType::HP1: return GroupFamily::make(FamilyKind::C2, 2);
    case SpaceType::OddSphere: return GroupFamily::make(FamilyKind::D, n);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown space");
}

int SpaceKind::dimension() const noexcept
{
    switch (type) {
    case SpaceType::CPn: return 2 * n;
    case SpaceType::EvenSphere: return 2 * n;
    case SpaceType::HP1: return 4;
    case SpaceType::OddSphere: return 2 * n - 1;
    }
    return 0;
}

std::string SpaceKind::name() const
{
    switch (type) {
    case SpaceType::CPn: return "cp:" + std::to_string(n);
    case SpaceType::HP1: return "hp1";
    case SpaceType::EvenSphere:
    case SpaceType::OddSphere: return "s:" + std::to_string(dimension());
    }
    return "?";
}

SpaceKind parse_space(std::string_view text)
{
    if (text == "hp1") {
        return SpaceKind::make(SpaceType::HP1, 2);
    }
    auto number = [&](std::string_view digits) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
            throw Error(ErrorCode::InvalidArgument, "bad space: " + std::string(text));
        }
        return value;
    };
    if (text.starts_with("cp:")) {
        return SpaceKind::make(SpaceType::CPn, number(text.substr(3)));
    }
    if (text.starts_with("s:")) {
        const int d = number(text.substr(2));
        if (d % 2 == 0) {
            return SpaceKind::make(SpaceType::EvenSphere, d / 2);
        }
        return SpaceKind::make(SpaceType::OddSphere, (d + 1) / 2);
    }
    throw Error(ErrorCode::InvalidArgument, "bad space: " + std::string(text));
}

CongruenceLattice lattice_for(const SpaceKind& space, const CyclicParams& params)
{
    return CongruenceLattice::make(space.family(), params, space.type == SpaceType::HP1);
}

std::int64_t eigenvalue(const SpaceKind& space, std::int64_t k)
{
    const std::int64_t n = space.n;
    switch (space.type) {
    case SpaceType::CPn: return checked_mul(k, checked_add(k, n));
    case SpaceType::EvenSphere:
    case SpaceType::HP1: return checked_mul(k, checked_add(k, 2 * n - 1));
    case SpaceType::OddSphere: return checked_mul(k, checked_add(k, 2 * n - 2));
    }
    return 0;
}

BigInt weight_multiplicity(const GroupFamily& family, std::int64_t k, const Weight& mu)
{
    if (mu.coords.size() != family.ambient_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "weight length does not match the family");
    }
    const std::int64_t n = family.n;
    switch (family.kind) {
    case FamilyKind::A: {
        std::int64_t sum = 0;
        for (const auto a : mu.coords) {
            sum += a;
        }
        if (sum != 0) {
            throw Error(ErrorCode::DimensionMismatch, "family A weights must sum to zero");
        }
        const std::int64_t r = k - norm(mu, Norm::One) / 2;
        return r >= 0 ? binomial(r + n - 1, n - 1) : BigInt(0);
    }
    case FamilyKind::B: {
        const std::int64_t d = k - norm(mu, Norm::One);
        return d >= 0 ? binomial(d / 2 + n - 1, n - 1) : BigInt(0);
    }
    case FamilyKind::C2: {
        const std::int64_t d = k - norm(mu, Norm::Inf);
        const bool even = ((mu.coords[0] + mu.coords[1]) & 1) == 0;
        return (d >= 0 && even) ? BigInt(d / 2 + 1) : BigInt(0);
    }
    case FamilyKind::D: {
        const std::int64_t d = k - norm(mu, Norm::One);
        return (d >= 0 && d % 2 == 0) ? binomial(d / 2 + n - 2, n - 2) : BigInt(0);
    }
    }
    return 0;
}

std::vector<BigInt> multiplicities_from_theta(const SpaceKind& space, const ThetaSeries& theta,
                                              std::size_t levels)
{
    if (theta.terms() < levels) {
        throw Error(ErrorCode::InvalidArgument, "theta series shorter than the requested levels");
    }
    const std::int64_t n = space.n;
    auto N = [&](std::int64_t j) { return j < 0 ? BigInt(0) : theta.coeffs[static_cast<std::size_t>(j)]; };
    std::vector<BigInt> out(levels);
    for (std::size_t level = 0; level < levels; ++level) {
        const auto k = static_cast<std::int64_t>(level);
        BigInt total = 0;
        switch (space.type) {
        case SpaceType::CPn:
            // theta.coeffs[j] already holds N(2j).
            for (std::int64_t r = 0; r <= k; ++r) {
                total += binomial(r + n - 1, n - 1) * N(k - r);
            }
            break;
        case SpaceType::EvenSphere:
            for (std::int64_t r = 0; r <= k / 2; ++r) {
                total += binomial(r + n - 1, n - 1) * (N(k - 2 * r) + N(k - 1 - 2 * r));
            }
            break;
        case SpaceType::HP1:
            for (std::int64_t r = 0; r <= k / 2; ++r) {
                total += (r + 1) * (N(k - 2 * r) + N(k - 1 - 2 * r));
            }
            break;
        case SpaceType::OddSphere:
            for (std::int64_t r = 0; r <= k / 2; ++r) {
                total += binomial(r + n - 2, n - 2) * N(k - 2 * r);
            }
            break;
        }
        out[level] = std::move(total);
    }
    return out;
}

namespace {

CongruenceLattice checked_lattice(const CongruenceLattice& lattice, const SpaceKind& space)
{
    if (lattice.family() != space.family()) {
        throw Error(ErrorCode::FamilyMismatch, "lattice family " + to_string(lattice.family()) +
                                                   " does not match space " + space.name());
    }
    if (space.type == SpaceType::HP1 && !lattice.even_sublattice()) {
        return lattice.with_even_sublattice(true);
    }
    return lattice;
}

} // namespace

BigInt multiplicity(const CongruenceLattice& lattice, const SpaceKind& space, std::int64_t k)
{
    if (k < 0) {
        throw Error(ErrorCode::InvalidArgument, "level must be non-negative");
    }
    const auto levels = static_cast<std::size_t>(k) + 1;
    const auto theta = theta_truncated(checked_lattice(lattice, space), levels);
    return multiplicities_from_theta(space, theta, levels).back();
}

SpectrumDescriptor spectrum_table(const CongruenceLattice& lattice, const SpaceKind& space,
                                  std::size_t levels)
{
    SpectrumDescriptor out{space, {}};
    if (levels == 0) {
        return out;
    }
    const auto theta = theta_truncated(checked_lattice(lattice, space), levels);
    auto mults = multiplicities_from_theta(space, theta, levels);
    for (std::size_t i = 0; i < levels; ++i) {
        const auto k = static_cast<std::int64_t>(i);
        out.entries.push_back({k, eigenvalue(space, k), std::move(mults[i])});
    }
    return out;
}

namespace {

// F = theta * factor_num / factor_den for the space.
std::pair<BigPoly, BigPoly> theta_factor(const SpaceKind& space)
{
    const std::int64_t n = space.n;
    switch (space.type) {
    case SpaceType::CPn: return {{1}, binomial_power(1, n)};
    case SpaceType::EvenSphere: return {binomial_power(1, 1, true), binomial_power(2, n)};
    case SpaceType::HP1: return {binomial_power(1, 1, true), binomial_power(2, 2)};
    case SpaceType::OddSphere: return {{1}, binomial_power(2, n - 1)};
    }
    return {{1}, {1}};
}

} // namespace

std::vector<BigInt> SpectralRational::expand(std::size_t terms) const
{
    return series_divide(numerator, denominator, terms);
}

SpectralRational spectral_generating_function(const CongruenceLattice& lattice,
                                              const SpaceKind& space)
{
    const auto form = ehrhart_form(checked_lattice(lattice, space));
    const auto [num, den] = theta_factor(space);
    SpectralRational out;
    out.numerator = poly_mul(poly_mul(binomial_power(1, 1), form.numerator), num);
    out.denominator = poly_mul(binomial_power(form.q, form.n + 1), den);
    trim(out.numerator);
    return out;
}

std::vector<BigInt> spectral_generating_series(const CongruenceLattice& lattice,
                                               const SpaceKind& space, std::size_t terms)
{
    const auto theta = theta_truncated(checked_lattice(lattice, space), terms);
    const auto [num, den] = theta_factor(space);
    BigPoly top = poly_mul(theta.coeffs, num);
    top.resize(terms);
    return series_divide(top, den, terms);
}

std::vector<BigInt> ikeda_generating_series(std::int64_t q, std::span<const std::int64_t> s,
                                            std::size_t terms)
{
    return cyclotomic_character_sum(q, s, 1, terms);
}

HighPrecision zeta_partial(const CongruenceLattice& lattice, const SpaceKind& space,
                           const BigRational& exponent, std::size_t levels)
{
    const auto table = spectrum_table(lattice, space, levels);
    const HighPrecision e = HighPrecision(boost::multiprecision::numerator(exponent)) /
                            HighPrecision(boost::multiprecision::denominator(exponent));
    HighPrecision total = 0;
    for (const auto& entry : table.entries) {
        if (entry.k == 0 || entry.multiplicity == 0) {
            continue;
        }
        const HighPrecision lambda(entry.eigenvalue);
        total += HighPrecision(entry.multiplicity) * exp(-e * log(lambda));
    }
    return total;
}

BigInt full_lattice_dimension(const GroupFamily& family, std::int64_t k)
{
    const std::size_t dim = family.ambient_dim();
    const bool zero_sum = family.kind == FamilyKind::A;
    const std::size_t free = zero_sum ? dim - 1 : dim;
    Weight mu{std::vector<std::int64_t>(dim, 0)};
    BigInt total = 0;
    auto visit = [&](auto& self, std::size_t i, std::int64_t sum) -> void {
        if (i == free) {
            if (zero_sum) {
                mu.coords[i] = -sum;
                if (mu.coords[i] < -k || mu.coords[i] > k) {
                    return;
                }
            }
            total += weight_multiplicity(family, k, mu);
            return;
        }
        for (std::int64_t a = -k; a <= k; ++a) {
            mu.coords[i] = a;
            self(self, i + 1, sum + a);
        }
    };
    visit(visit, 0, 0);
    return total;
}

BigInt weyl_dimension(const GroupFamily& family, std::int64_t k)
{
    const auto dim = static_cast<std::int64_t>(family.ambient_dim());
    const std::int64_t n = family.n;
    // Doubled highest weight 2 k Lambda_0 and doubled rho, in epsilon coordinates.
    std::vector<std::int64_t> lambda(static_cast<std::size_t>(dim), 0);
    std::vector<std::int64_t> rho(static_cast<std::size_t>(dim), 0);
    std::vector<std::vector<std::int64_t>> roots;
    auto root = [&](std::int64_t i, std::int64_t ci, std::int64_t j, std::int64_t cj) {
        std::vector<std::int64_t> r(static_cast<std::size_t>(dim), 0);
        r[static_cast<std::size_t>(i)] += ci;
        if (j >= 0) {
            r[static_cast<std::size_t>(j)] += cj;
        }
        roots.push_back(std::move(r));
    };
    for (std::int64_t i = 0; i < dim; ++i) {
        const std::int64_t idx = i + 1;
        auto& r = rho[static_cast<std::size_t>(i)];
        switch (family.kind) {
        case FamilyKind::A: r = n - 2 * idx + 2; break;
        case FamilyKind::B: r = 2 * n - (2 * idx - 1); break;
        case FamilyKind::C2: r = 2 * (n - idx + 1); break;
        case FamilyKind::D: r = 2 * (n - idx); break;
        }
    }
    switch (family.kind) {
    case FamilyKind::A:
        lambda[0] = 2 * k;
        lambda[static_cast<std::size_t>(dim - 1)] = -2 * k;
        for (std::int64_t i = 0; i < dim; ++i) {
            for (std::int64_t j = i + 1; j < dim; ++j) {
                root(i, 1, j, -1);
            }
        }
        break;
    case FamilyKind::B:
    case FamilyKind::C2:
    case FamilyKind::D:
        lambda[0] = 2 * k;
        if (family.kind == FamilyKind::C2) {
            lambda[1] = 2 * k;
        }
        for (std::int64_t i = 0; i < dim; ++i) {
            for (std::int64_t j = i + 1; j < dim; ++j) {
                root(i, 1, j, -1);
                root(i, 1, j, 1);
            }
            if (family.kind == FamilyKind::B) {
                root(i, 1, -1, 0);
            } else if (family.kind == FamilyKind::C2) {
                root(i, 2, -1, 0);
            }
        }
        break;
    }
    BigRational product = 1;
    for (const auto& alpha : roots) {
        BigInt top = 0;
        BigInt bottom = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            top += (lambda[i] + rho[i]) * alpha[i];
            bottom += rho[i] * alpha[i];
        }
        product *= BigRational(top, bottom);
    }
    if (denominator(product) != 1) {
        throw Error(ErrorCode::NonIntegralCoefficient, "Weyl dimension is not an integer");
    }
    return numerator(product);
}

} // namespace isospec
