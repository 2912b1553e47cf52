#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permstats/checked.hpp"
#include "permstats/perm.hpp"
#include "permstats/series.hpp"
#include "permstats/stats.hpp"

namespace permstats {

// Closed-form distributions a(n, k) = #{p in S_n(B) : stat(p) = k}.
enum class FormulaId {
    PK231,
    NARAYANA,
    ASC_213_312,
    DASC_213_312,
    PK_213_312,
    VL_213_312,
    ASC_132_213,
    PK_132_213,
    ASC_123_132,
    DES_123_132,
    DASC_123_132,
    DDES_123_132,
    PK_123_132,
    VL_123_132,
    ASC_132_321,
    DES_132_321,
    DASC_132_321,
    DDES_132_321,
    PK_132_321,
    VL_132_321,
};

// A (statistic, basis) pair whose distribution a formula gives.
struct FormulaTarget {
    StatKind stat;
    std::string basis;
};

struct FormulaInfo {
    FormulaId id;
    std::string_view name;
    std::string_view expression;
    // Smallest n for which the stated formula holds; below it closed_form reports out-of-domain.
    unsigned min_n;
    std::vector<FormulaTarget> targets;
};

const std::vector<FormulaInfo>& formula_registry();
const FormulaInfo& formula_info(FormulaId id);

// Throws InvalidInput on an unknown name.
FormulaId parse_formula_id(std::string_view name);
std::string_view formula_name(FormulaId id);

// Exact value, 0 outside the support. std::nullopt when n is outside the formula's stated range.
std::optional<Count> closed_form(FormulaId id, unsigned n, unsigned k);

// Formulas whose targets include (stat, basis).
std::vector<FormulaId> formulas_for(StatKind stat, const PatternSet& basis);

// |S_n(B)| for the bases with a known count (single patterns of length 3 and the six pairs).
std::optional<Count> class_size(const PatternSet& basis, unsigned n);

// A(q, z): des over S_n(321), the power-series root of z(1 - z + qz)G^2 - G + 1 = 0.
BivariateSeries series_des321(std::size_t max_degree);

// C(q, z) = 1 + z A^2: pk over S_n(321).
BivariateSeries series_pk321(std::size_t max_degree);

// B = (A - 1) / A: st over indecomposable Dyck words.
BivariateSeries series_B(std::size_t max_degree);

// D = z A: st* over indecomposable Dyck words.
BivariateSeries series_D(std::size_t max_degree);

// (1 - qz) / (1 - z - z^2 - qz + qz^2): ddes (and dasc) over S_n(132,213) and S_n(213,231).
BivariateSeries series_ddes_132_213(std::size_t max_degree);

inline constexpr std::string_view kSeriesNames[] = {"des321", "pk321", "B", "D", "ddes132213"};

// Throws InvalidInput for an unknown name.
BivariateSeries series_by_name(std::string_view name, std::size_t max_degree);

// Series whose z^n row is the (stat, basis) distribution, if one is implemented.
std::optional<std::string> series_for(StatKind stat, const PatternSet& basis);

} // namespace permstats
