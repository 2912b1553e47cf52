#pragma once

#include <array>
#include <span>
#include <string_view>

#include "permstats/perm.hpp"

namespace permstats {

enum class StatKind { asc, des, dasc, ddes, pk, vl };

inline constexpr std::array<StatKind, 6> kAllStats{StatKind::asc,  StatKind::des, StatKind::dasc,
                                                   StatKind::ddes, StatKind::pk,  StatKind::vl};

std::string_view stat_name(StatKind kind);

// Throws InvalidInput for anything outside the six names.
StatKind parse_stat(std::string_view name);

// Windows of length 2 (asc, des) or 3 (the rest); 0 when the permutation is shorter than the window.
unsigned stat(StatKind kind, std::span<const int> p);
inline unsigned stat(StatKind kind, const Perm& p) { return stat(kind, p.values()); }

// All six statistics in one pass, indexed by StatKind.
std::array<unsigned, 6> all_stats(std::span<const int> p);

// Number of i with red(p_i p_{i+1} p_{i+2}) == pattern. Throws InvalidInput if pattern.size() != 3.
unsigned consec3_count(const Perm& p, const Perm& pattern);

} // namespace permstats
