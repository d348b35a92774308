#pragma once

#include <cstdint>
#include <vector>

namespace isospec {

/// Z[xi_q] = Z[x] / Phi_q(x) in the power basis 1, x, ..., x^(phi(q)-1).
/// Coefficients are 128-bit with overflow checks.
class CyclotomicRing {
public:
    using Coeff = __int128;
    using Element = std::vector<Coeff>;

    explicit CyclotomicRing(std::int64_t q);

    std::int64_t order() const noexcept { return q_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }
    /// Phi_q as an integer coefficient vector, lowest degree first (monic).
    const std::vector<std::int64_t>& modulus() const noexcept { return modulus_; }

    Element zero() const { return Element(degree(), 0); }
    Element one() const;
    Element from_integer(std::int64_t value) const;
    /// xi_q^k for any integer k.
    Element root_power(std::int64_t k) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;

    /// True when the element is a rational integer; writes it to `out`.
    bool as_integer(const Element& a, Coeff& out) const;

private:
    std::int64_t q_;
    std::vector<std::int64_t> modulus_;
    std::vector<Element> powers_; // xi^k reduced, k in [0, q)
};

/// Coefficients of the q-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t q);

} // namespace isospec
