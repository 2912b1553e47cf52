#pragma once

#include <cstdint>

#include "permstats/errors.hpp"

namespace permstats {

using Count = std::uint64_t;

inline Count checked_add(Count a, Count b)
{
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("count addition overflow");
    return r;
}

inline Count checked_mul(Count a, Count b)
{
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("count multiplication overflow");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient multiplication overflow");
    return r;
}

// C(a, b), zero when b < 0 or b > a.
Count binomial(std::int64_t a, std::int64_t b);

Count catalan(unsigned n);

} // namespace permstats
