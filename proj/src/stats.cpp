#include "permstats/stats.hpp"

#include "permstats/errors.hpp"

namespace permstats {

namespace {
constexpr std::array<std::string_view, 6> kNames{"asc", "des", "dasc", "ddes", "pk", "vl"};
}

std::string_view stat_name(StatKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

StatKind parse_stat(std::string_view name)
{
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) return static_cast<StatKind>(i);
    }
    throw InvalidInput("unknown statistic '" + std::string(name) + "'");
}

std::array<unsigned, 6> all_stats(std::span<const int> p)
{
    std::array<unsigned, 6> out{};
    const std::size_t n = p.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const bool up = p[i] < p[i + 1];
        ++out[static_cast<std::size_t>(up ? StatKind::asc : StatKind::des)];
        if (i + 2 < n) {
            const bool up2 = p[i + 1] < p[i + 2];
            StatKind k = up ? (up2 ? StatKind::dasc : StatKind::pk) : (up2 ? StatKind::vl : StatKind::ddes);
            ++out[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

unsigned stat(StatKind kind, std::span<const int> p)
{
    const std::size_t n = p.size();
    unsigned count = 0;
    switch (kind) {
    case StatKind::asc:
    case StatKind::des:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if ((p[i] < p[i + 1]) == (kind == StatKind::asc)) ++count;
        }
        return count;
    default:
        break;
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        const bool up1 = p[i] < p[i + 1];
        const bool up2 = p[i + 1] < p[i + 2];
        switch (kind) {
        case StatKind::dasc: count += up1 && up2; break;
        case StatKind::ddes: count += !up1 && !up2; break;
        case StatKind::pk: count += up1 && !up2; break;
        case StatKind::vl: count += !up1 && up2; break;
        default: break;
        }
    }
    return count;
}

unsigned consec3_count(const Perm& p, const Perm& pattern)
{
    if (pattern.size() != 3) throw InvalidInput("consec3_count needs a pattern of length 3");
    const auto v = p.values();
    unsigned count = 0;
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        if (reduce(v.subspan(i, 3)) == pattern) ++count;
    }
    return count;
}

} // namespace permstats
