#include "permstats/checked.hpp"

namespace permstats {

namespace {
__extension__ using Wide = unsigned __int128;
}

Count binomial(std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Count r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        // r * (a - b + i) is divisible by i at every step.
        const Wide wide = static_cast<Wide>(r) * static_cast<Wide>(a - b + i) / static_cast<Wide>(i);
        if (wide > static_cast<Wide>(UINT64_MAX)) throw ArithmeticOverflow("binomial overflow");
        r = static_cast<Count>(wide);
    }
    return r;
}

Count catalan(unsigned n) { return binomial(2 * static_cast<std::int64_t>(n), n) / (n + 1); }

} // namespace permstats
