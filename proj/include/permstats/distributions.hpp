#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permstats/checked.hpp"
#include "permstats/formulas.hpp"
#include "permstats/generators.hpp"
#include "permstats/perm.hpp"
#include "permstats/stats.hpp"

namespace permstats {

enum class Method { oracle, closed_form, series };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

// k -> a(n, k). Zero counts are never stored.
using DistRow = std::map<unsigned, Count>;

// Rows of a(n, k) for one (statistic, basis) pair, keyed by n.
struct DistTable {
    PatternSet basis;
    StatKind stat;
    Method method;
    std::map<unsigned, DistRow> rows;

    bool operator==(const DistTable&) const = default;
};

struct DistOptions {
    unsigned workers = 1;
    Limits limits{};
};

// Counts for every statistic at once over S_n(basis), indexed by StatKind.
// Work is split by first entry across `workers` threads; the merged result does not depend on the split.
std::array<DistRow, 6> oracle_rows(const PatternSet& basis, unsigned n, const DistOptions& opts = {});

// Throws Unsupported when `method` has no implementation for (stat, basis) or for this n,
// ResourceLimit when n exceeds a cap.
DistRow distribution(StatKind stat, const PatternSet& basis, unsigned n, Method method, const DistOptions& opts = {});

DistTable distribution_table(StatKind stat, const PatternSet& basis, unsigned n_min, unsigned n_max, Method method,
                             const DistOptions& opts = {});

// Which methods can produce (stat, basis) at n.
std::vector<Method> supported_methods(StatKind stat, const PatternSet& basis, unsigned n);

// Drops zeros so rows from different sources compare equal.
DistRow normalized(DistRow row);

enum class Transform { identity, r, c, rc };

std::string_view transform_name(Transform t);
Transform parse_transform(std::string_view name);
PatternSet apply_transform(const PatternSet& basis, Transform t);

// The statistic on the transformed basis with the same distribution as `stat` on the original.
StatKind partner_stat(StatKind stat, Transform t);

struct Discrepancy {
    unsigned n = 0;
    std::optional<unsigned> k;
    Count expected = 0;
    Count actual = 0;
    std::string message;
};

struct VerifyReport {
    std::string name;
    unsigned n_min = 0;
    unsigned n_max = 0;
    // Pass/fail per n over [n_min, n_max].
    std::map<unsigned, bool> per_n;
    std::optional<Discrepancy> first_failure;

    bool passed() const;
};

// a(stat; basis) against a(partner; transformed basis) for n in [0, max_n].
VerifyReport symmetry_check(StatKind stat, const PatternSet& basis, Transform t, unsigned max_n,
                            const DistOptions& opts = {});

struct VerifyOptions {
    unsigned max_n = 8;
    // Check names to run; empty runs everything.
    std::vector<std::string> selection;
    unsigned workers = 1;
    Limits limits{};
    // Adds one to every k = 0 value of this closed form, to exercise the failure path.
    std::optional<FormulaId> fault;
};

std::vector<std::string> verify_check_names();

// One report per selected check, in registry order. Throws InvalidInput for an unknown name.
std::vector<VerifyReport> verify_all(const VerifyOptions& opts);

bool all_passed(const std::vector<VerifyReport>& reports);

} // namespace permstats
