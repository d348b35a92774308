#include "isospec/cyclotomic.hpp"

#include "isospec/error.hpp"
#include "isospec/weight_lattice.hpp"

namespace isospec {

namespace {

using Coeff = CyclotomicRing::Coeff;

Coeff add_checked(Coeff a, Coeff b)
{
    Coeff r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, "cyclotomic coefficient overflow");
    }
    return r;
}

Coeff mul_checked(Coeff a, Coeff b)
{
    Coeff r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, "cyclotomic coefficient overflow");
    }
    return r;
}

// Exact quotient num / den for a monic divisor den.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den)
{
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const std::int64_t c = num[i];
        quot[i - dn] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dn; ++j) {
            num[i - dn + j] -= c * den[j];
        }
    }
    for (std::size_t i = 0; i < dn; ++i) {
        if (num[i] != 0) {
            throw Error(ErrorCode::InvalidArgument, "inexact cyclotomic division");
        }
    }
    return quot;
}

} // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t q)
{
    if (q < 1) {
        throw Error(ErrorCode::ZeroOrder, "cyclotomic order must be positive");
    }
    // x^q - 1 = prod_{d | q} Phi_d(x)
    std::vector<std::int64_t> poly(static_cast<std::size_t>(q) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(q)] = 1;
    for (std::int64_t d = 1; d < q; ++d) {
        if (q % d == 0) {
            poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
        }
    }
    return poly;
}

CyclotomicRing::CyclotomicRing(std::int64_t q) : q_(q), modulus_(cyclotomic_polynomial(q))
{
    const std::size_t deg = degree();
    powers_.reserve(static_cast<std::size_t>(q));
    Element current = one();
    for (std::int64_t k = 0; k < q; ++k) {
        powers_.push_back(current);
        // multiply by x: shift up, then fold the x^deg term back with Phi_q
        Element next(deg, 0);
        const Coeff top = current[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) {
            next[i] = current[i - 1];
        }
        next[0] = 0;
        if (top != 0) {
            for (std::size_t i = 0; i < deg; ++i) {
                next[i] = add_checked(next[i], mul_checked(-top, modulus_[i]));
            }
        }
        current = std::move(next);
    }
}

CyclotomicRing::Element CyclotomicRing::one() const { return from_integer(1); }

CyclotomicRing::Element CyclotomicRing::from_integer(std::int64_t value) const
{
    Element e = zero();
    e[0] = value;
    return e;
}

CyclotomicRing::Element CyclotomicRing::root_power(std::int64_t k) const
{
    return powers_[static_cast<std::size_t>(mod_floor(k, q_))];
}

CyclotomicRing::Element CyclotomicRing::add(const Element& a, const Element& b) const
{
    Element r(degree());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = add_checked(a[i], b[i]);
    }
    return r;
}

CyclotomicRing::Element CyclotomicRing::sub(const Element& a, const Element& b) const
{
    return add(a, negate(b));
}

CyclotomicRing::Element CyclotomicRing::negate(const Element& a) const
{
    Element r(degree());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = mul_checked(a[i], -1);
    }
    return r;
}

CyclotomicRing::Element CyclotomicRing::mul(const Element& a, const Element& b) const
{
    const std::size_t deg = degree();
    std::vector<Coeff> prod(2 * deg - 1, 0);
    for (std::size_t i = 0; i < deg; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < deg; ++j) {
            if (b[j] != 0) {
                prod[i + j] = add_checked(prod[i + j], mul_checked(a[i], b[j]));
            }
        }
    }
    for (std::size_t d = prod.size(); d-- > deg;) {
        const Coeff c = prod[d];
        if (c == 0) {
            continue;
        }
        for (std::size_t i = 0; i <= deg; ++i) {
            prod[d - deg + i] = add_checked(prod[d - deg + i], mul_checked(-c, modulus_[i]));
        }
    }
    prod.resize(deg);
    return prod;
}

bool CyclotomicRing::as_integer(const Element& a, Coeff& out) const
{
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] != 0) {
            return false;
        }
    }
    out = a[0];
    return true;
}

} // namespace isospec
