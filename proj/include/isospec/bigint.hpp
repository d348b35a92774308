#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace isospec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n (n >= 0).
BigInt binomial(std::int64_t n, std::int64_t k);

/// Integer polynomial helpers over BigInt coefficient vectors (index = degree).
using BigPoly = std::vector<BigInt>;

BigPoly poly_mul(const BigPoly& a, const BigPoly& b);
/// (1 - z^step)^power, or (1 + z^step)^power when plus is true.
BigPoly binomial_power(std::int64_t step, std::int64_t power, bool plus = false);
/// First `terms` coefficients of num/den; den[0] must be 1.
BigPoly series_divide(const BigPoly& num, const BigPoly& den, std::size_t terms);
void trim(BigPoly& p);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace isospec
