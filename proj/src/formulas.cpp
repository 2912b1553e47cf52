#include "permstats/formulas.hpp"

#include <algorithm>

#include "permstats/errors.hpp"

namespace permstats {

namespace {

using S = StatKind;

Count pow2(unsigned e) { return Count{1} << e; }

const std::vector<std::string> kSingleCatalan{"123", "132", "213", "231", "312", "321"};
const std::vector<std::string> kPowerOfTwo{"213,312", "132,213", "213,231", "123,132"};

} // namespace

const std::vector<FormulaInfo>& formula_registry()
{
    static const std::vector<FormulaInfo> table{
        {FormulaId::PK231, "PK231", "2^(n-2k-1) C(n-1,2k) C(2k,k) / (k+1)", 1, {{S::pk, "231"}}},
        {FormulaId::NARAYANA,
         "NARAYANA",
         "C(n-1,k) C(n,k) / (k+1)",
         1,
         {{S::asc, "132"}, {S::asc, "213"}, {S::asc, "231"}, {S::asc, "312"},
          {S::des, "132"}, {S::des, "213"}, {S::des, "231"}, {S::des, "312"}}},
        {FormulaId::ASC_213_312, "ASC_213_312", "C(n-1,k)", 1, {{S::asc, "213,312"}, {S::des, "213,312"}}},
        {FormulaId::DASC_213_312,
         "DASC_213_312",
         "n if k = 0; C(n-1,k+1) if k >= 1",
         1,
         {{S::dasc, "213,312"}, {S::ddes, "213,312"}}},
        {FormulaId::PK_213_312, "PK_213_312", "2 if k = 0; 2^(n-1) - 2 if k = 1", 2, {{S::pk, "213,312"}}},
        {FormulaId::VL_213_312, "VL_213_312", "2^(n-1) if k = 0", 1, {{S::vl, "213,312"}}},
        {FormulaId::ASC_132_213,
         "ASC_132_213",
         "C(n-1,k)",
         1,
         {{S::asc, "132,213"}, {S::des, "132,213"}, {S::asc, "213,231"}, {S::des, "213,231"}}},
        {FormulaId::PK_132_213,
         "PK_132_213",
         "C(n,2k+1)",
         1,
         {{S::pk, "132,213"}, {S::vl, "132,213"}, {S::pk, "213,231"}, {S::vl, "213,231"}}},
        {FormulaId::ASC_123_132, "ASC_123_132", "C(n,2k)", 1, {{S::asc, "123,132"}}},
        {FormulaId::DES_123_132, "DES_123_132", "C(n,2(n-k-1))", 1, {{S::des, "123,132"}}},
        {FormulaId::DASC_123_132, "DASC_123_132", "2^(n-1) if k = 0", 3, {{S::dasc, "123,132"}}},
        {FormulaId::DDES_123_132, "DDES_123_132", "C(n-2,k) + 2 C(n-3,k)", 3, {{S::ddes, "123,132"}}},
        {FormulaId::PK_123_132, "PK_123_132", "C(n,2k+1)", 1, {{S::pk, "123,132"}}},
        {FormulaId::VL_123_132, "VL_123_132", "2 C(n-1,2k)", 2, {{S::vl, "123,132"}}},
        {FormulaId::ASC_132_321, "ASC_132_321", "1 if k = n-1; C(n,2) if k = n-2", 1, {{S::asc, "132,321"}}},
        {FormulaId::DES_132_321, "DES_132_321", "1 if k = 0; C(n,2) if k = 1", 1, {{S::des, "132,321"}}},
        {FormulaId::DASC_132_321,
         "DASC_132_321",
         "1 if k = n-2; n if k = n-3; C(n,2) - n if k = n-4",
         3,
         {{S::dasc, "132,321"}}},
        {FormulaId::DDES_132_321, "DDES_132_321", "C(n,2) + 1 if k = 0", 3, {{S::ddes, "132,321"}}},
        {FormulaId::PK_132_321, "PK_132_321", "n if k = 0; C(n-1,2) if k = 1", 1, {{S::pk, "132,321"}}},
        {FormulaId::VL_132_321, "VL_132_321", "2 if k = 0; C(n,2) - 1 if k = 1", 2, {{S::vl, "132,321"}}},
    };
    return table;
}

const FormulaInfo& formula_info(FormulaId id)
{
    for (const auto& info : formula_registry()) {
        if (info.id == id) return info;
    }
    throw InvalidInput("unregistered formula id");
}

FormulaId parse_formula_id(std::string_view name)
{
    for (const auto& info : formula_registry()) {
        if (info.name == name) return info.id;
    }
    throw InvalidInput("unknown formula '" + std::string(name) + "'");
}

std::string_view formula_name(FormulaId id) { return formula_info(id).name; }

std::optional<Count> closed_form(FormulaId id, unsigned n, unsigned k)
{
    if (n < 1 || n < formula_info(id).min_n) return std::nullopt;
    const std::int64_t N = n, K = k;
    switch (id) {
    case FormulaId::PK231:
        if (2 * K + 1 > N) return 0;
        return pow2(static_cast<unsigned>(N - 2 * K - 1)) * binomial(N - 1, 2 * K) * binomial(2 * K, K) / (K + 1);
    case FormulaId::NARAYANA: return checked_mul(binomial(N - 1, K), binomial(N, K)) / (K + 1);
    case FormulaId::ASC_213_312: return binomial(N - 1, K);
    case FormulaId::DASC_213_312: return K == 0 ? static_cast<Count>(N) : binomial(N - 1, K + 1);
    case FormulaId::PK_213_312: return K == 0 ? 2 : K == 1 ? pow2(n - 1) - 2 : 0;
    case FormulaId::VL_213_312: return K == 0 ? pow2(n - 1) : 0;
    case FormulaId::ASC_132_213: return binomial(N - 1, K);
    case FormulaId::PK_132_213: return binomial(N, 2 * K + 1);
    case FormulaId::ASC_123_132: return binomial(N, 2 * K);
    case FormulaId::DES_123_132: return binomial(N, 2 * (N - K - 1));
    case FormulaId::DASC_123_132: return K == 0 ? pow2(n - 1) : 0;
    case FormulaId::DDES_123_132: return binomial(N - 2, K) + 2 * binomial(N - 3, K);
    case FormulaId::PK_123_132: return binomial(N, 2 * K + 1);
    case FormulaId::VL_123_132: return 2 * binomial(N - 1, 2 * K);
    case FormulaId::ASC_132_321: return K == N - 1 ? 1 : K == N - 2 ? binomial(N, 2) : 0;
    case FormulaId::DES_132_321: return K == 0 ? 1 : K == 1 ? binomial(N, 2) : 0;
    case FormulaId::DASC_132_321:
        if (K == N - 2) return 1;
        if (K == N - 3) return static_cast<Count>(N);
        if (K == N - 4) return binomial(N, 2) - static_cast<Count>(N);
        return 0;
    case FormulaId::DDES_132_321: return K == 0 ? binomial(N, 2) + 1 : 0;
    case FormulaId::PK_132_321: return K == 0 ? static_cast<Count>(N) : K == 1 ? binomial(N - 1, 2) : 0;
    case FormulaId::VL_132_321: return K == 0 ? 2 : K == 1 ? binomial(N, 2) - 1 : 0;
    }
    throw InvalidInput("unregistered formula id");
}

std::vector<FormulaId> formulas_for(StatKind stat, const PatternSet& basis)
{
    const std::string key = basis.to_string();
    std::vector<FormulaId> out;
    for (const auto& info : formula_registry()) {
        for (const auto& t : info.targets) {
            if (t.stat == stat && t.basis == key) out.push_back(info.id);
        }
    }
    return out;
}

std::optional<Count> class_size(const PatternSet& basis, unsigned n)
{
    const std::string key = basis.to_string();
    if (std::find(kSingleCatalan.begin(), kSingleCatalan.end(), key) != kSingleCatalan.end()) return catalan(n);
    if (std::find(kPowerOfTwo.begin(), kPowerOfTwo.end(), key) != kPowerOfTwo.end()) {
        return n == 0 ? 1 : pow2(n - 1);
    }
    if (key == "132,321") return n == 0 ? 1 : binomial(n, 2) + 1;
    if (key == "123,321") return n >= 5 ? 0 : n == 0 ? 1 : n <= 2 ? n : n == 3 ? 4 : 4;
    return std::nullopt;
}

BivariateSeries series_des321(std::size_t max_degree)
{
    // G <- 1 + z (1 - z + q z) G^2; each pass fixes one more z-degree.
    BivariateSeries kernel(max_degree);
    if (max_degree >= 1) kernel.set(1, 0, 1);
    if (max_degree >= 2) {
        kernel.set(2, 0, -1);
        kernel.set(2, 1, 1);
    }
    const BivariateSeries one = BivariateSeries::constant(max_degree, 1);
    BivariateSeries g = one;
    for (std::size_t iter = 0; iter <= max_degree; ++iter) g = one + kernel * (g * g);
    return g;
}

BivariateSeries series_pk321(std::size_t max_degree)
{
    const BivariateSeries a = series_des321(max_degree);
    return BivariateSeries::constant(max_degree, 1) + (a * a).shift_z(1);
}

BivariateSeries series_B(std::size_t max_degree)
{
    const BivariateSeries a = series_des321(max_degree);
    return BivariateSeries::constant(max_degree, 1) - a.inverse();
}

BivariateSeries series_D(std::size_t max_degree) { return series_des321(max_degree).shift_z(1); }

BivariateSeries series_ddes_132_213(std::size_t max_degree)
{
    // F_n = [n = 0] - q [n = 1] + (1 + q) F_{n-1} + (1 - q) F_{n-2}
    BivariateSeries f(max_degree);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        if (n == 0) f.add(0, 0, 1);
        if (n == 1) f.add(1, 1, -1);
        if (n >= 1) {
            for (std::size_t k = 0; k < f.row(n - 1).size(); ++k) {
                const auto c = f.coeff(n - 1, k);
                f.add(n, k, c);
                f.add(n, k + 1, c);
            }
        }
        if (n >= 2) {
            for (std::size_t k = 0; k < f.row(n - 2).size(); ++k) {
                const auto c = f.coeff(n - 2, k);
                f.add(n, k, c);
                f.add(n, k + 1, checked_mul(std::int64_t{-1}, c));
            }
        }
    }
    return f;
}

BivariateSeries series_by_name(std::string_view name, std::size_t max_degree)
{
    if (name == "des321") return series_des321(max_degree);
    if (name == "pk321") return series_pk321(max_degree);
    if (name == "B") return series_B(max_degree);
    if (name == "D") return series_D(max_degree);
    if (name == "ddes132213") return series_ddes_132_213(max_degree);
    throw InvalidInput("unknown series '" + std::string(name) + "'");
}

std::optional<std::string> series_for(StatKind stat, const PatternSet& basis)
{
    const std::string key = basis.to_string();
    if ((stat == S::des && key == "321") || (stat == S::asc && key == "123")) return "des321";
    if ((stat == S::pk && (key == "321" || key == "123" || key == "312" || key == "213")) ||
        (stat == S::vl && (key == "321" || key == "123" || key == "231" || key == "132"))) {
        return "pk321";
    }
    if ((stat == S::dasc || stat == S::ddes) && (key == "132,213" || key == "213,231")) return "ddes132213";
    return std::nullopt;
}

} // namespace permstats
