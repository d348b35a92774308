#include "isospec/bigint.hpp"

#include <algorithm>

#include "isospec/error.hpp"

namespace isospec {

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

void trim(BigPoly& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

BigPoly poly_mul(const BigPoly& a, const BigPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    BigPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

BigPoly binomial_power(std::int64_t step, std::int64_t power, bool plus)
{
    if (step < 1 || power < 0) {
        throw Error(ErrorCode::InvalidArgument, "binomial_power needs step >= 1 and power >= 0");
    }
    BigPoly out(static_cast<std::size_t>(step * power + 1));
    for (std::int64_t j = 0; j <= power; ++j) {
        BigInt c = binomial(power, j);
        if (!plus && (j % 2 == 1)) {
            c = -c;
        }
        out[static_cast<std::size_t>(j * step)] = c;
    }
    return out;
}

BigPoly series_divide(const BigPoly& num, const BigPoly& den, std::size_t terms)
{
    if (den.empty() || den[0] != 1) {
        throw Error(ErrorCode::InvalidArgument, "series_divide needs a denominator with constant term 1");
    }
    BigPoly out(terms);
    for (std::size_t m = 0; m < terms; ++m) {
        BigInt acc = m < num.size() ? num[m] : BigInt(0);
        const std::size_t top = std::min(m, den.size() - 1);
        for (std::size_t i = 1; i <= top; ++i) {
            if (den[i] != 0) {
                acc -= den[i] * out[m - i];
            }
        }
        out[m] = std::move(acc);
    }
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, "64-bit addition overflow");
    }
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, "64-bit multiplication overflow");
    }
    return r;
}

} // namespace isospec
