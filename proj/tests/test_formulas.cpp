#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "permstats/errors.hpp"
#include "permstats/formulas.hpp"

using namespace permstats;

namespace {
oracle::Row series_row(const BivariateSeries& s, std::size_t n)
{
    oracle::Row r;
    const auto coeffs = s.row(n);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        REQUIRE(coeffs[k] >= 0);
        if (coeffs[k]) r[static_cast<unsigned>(k)] = static_cast<std::uint64_t>(coeffs[k]);
    }
    return r;
}
} // namespace

TEST_SUITE("formulas")
{
    TEST_CASE("arithmetic helpers")
    {
        CHECK(binomial(5, 2) == 10);
        CHECK(binomial(5, -1) == 0);
        CHECK(binomial(5, 6) == 0);
        CHECK(binomial(66, 33) == 7219428434016265740ULL);
        CHECK_THROWS_AS(binomial(70, 35), ArithmeticOverflow);
        for (int n = 0; n <= 15; ++n) CHECK(catalan(n) == oracle::catalan(n));
        CHECK_THROWS_AS(checked_add(Count{~0ULL}, Count{1}), ArithmeticOverflow);
    }

    TEST_CASE("closed-form examples")
    {
        CHECK(closed_form(FormulaId::PK231, 4, 1) == 6);
        CHECK(closed_form(FormulaId::ASC_213_312, 5, 2) == 6);
        CHECK(closed_form(FormulaId::VL_132_321, 4, 1) == 5);
        CHECK(closed_form(FormulaId::PK231, 3, 5) == 0);
        CHECK_FALSE(closed_form(FormulaId::DDES_123_132, 2, 0).has_value());
        CHECK_FALSE(closed_form(FormulaId::PK231, 0, 0).has_value());
        CHECK(parse_formula_id("PK231") == FormulaId::PK231);
        CHECK_THROWS_AS(parse_formula_id("UNKNOWN"), InvalidInput);
    }

    TEST_CASE("registry names are distinct and round-trip")
    {
        std::set<std::string_view> names;
        for (const auto& info : formula_registry()) {
            CHECK(parse_formula_id(info.name) == info.id);
            CHECK(names.insert(info.name).second);
            CHECK_FALSE(info.targets.empty());
        }
        CHECK(formula_registry().size() == 20);
    }

    TEST_CASE("every closed form matches brute force and sums to the class size, n <= 8")
    {
        const char* names[] = {"asc", "des", "dasc", "ddes", "pk", "vl"};
        for (const auto& info : formula_registry()) {
            for (const auto& t : info.targets) {
                for (int n = static_cast<int>(std::max(1u, info.min_n)); n <= 8; ++n) {
                    const auto expected = oracle::distribution(names[static_cast<int>(t.stat)], n, t.basis);
                    oracle::Row got;
                    std::uint64_t sum = 0;
                    for (unsigned k = 0; k <= static_cast<unsigned>(n); ++k) {
                        const auto v = closed_form(info.id, n, k);
                        REQUIRE(v.has_value());
                        if (*v) got[k] = *v;
                        sum += *v;
                    }
                    INFO(info.name, " ", t.basis, " n=", n);
                    REQUIRE(got == expected);
                    REQUIRE(sum == class_size(PatternSet::parse(t.basis), n).value());
                }
            }
        }
    }

    TEST_CASE("formulas_for and class_size")
    {
        CHECK(formulas_for(StatKind::pk, PatternSet::parse("231")) == std::vector<FormulaId>{FormulaId::PK231});
        CHECK(formulas_for(StatKind::dasc, PatternSet::parse("321")).empty());
        CHECK(class_size(PatternSet::parse("132,321"), 5) == 11);
        CHECK(class_size(PatternSet::parse("123,321"), 6) == 0);
        CHECK(class_size(PatternSet::parse("123,321"), 4) == 4);
        CHECK_FALSE(class_size(PatternSet::parse("1234"), 4).has_value());
    }

    TEST_CASE("series arithmetic")
    {
        BivariateSeries a(4);
        a.set(0, 0, 1);
        a.set(1, 1, 2);
        const auto inv = a.inverse();
        const auto one = a * inv;
        CHECK(one == BivariateSeries::constant(4, 1));
        CHECK(a.shift_z(1).coeff(2, 1) == 2);
        CHECK((a - a) == BivariateSeries(4));
        CHECK_THROWS(BivariateSeries(3).inverse());
    }

    TEST_CASE("series examples")
    {
        const auto a = series_des321(10);
        CHECK(a.coeff(0, 0) == 1);
        CHECK(a.coeff(3, 1) == 4);
        const auto c = series_pk321(10);
        CHECK(c.coeff(3, 1) == 2);
        CHECK(c.coeff(1, 0) == 1);
        for (int n = 0; n <= 10; ++n) {
            CHECK(a.row_sum(n) == static_cast<std::int64_t>(oracle::catalan(n)));
            CHECK(c.row_sum(n) == static_cast<std::int64_t>(oracle::catalan(n)));
        }
        const auto b = series_B(10);
        CHECK(b.coeff(1, 0) == 1);
        CHECK(b.coeff(1, 1) == 0);
        const auto d = series_D(10);
        for (int n = 0; n < 10; ++n) CHECK(d.row(n + 1) == a.row(n));
        const auto f = series_ddes_132_213(10);
        CHECK(f.coeff(0, 0) == 1);
        for (int n = 1; n <= 10; ++n) CHECK(f.row_sum(n) == (std::int64_t{1} << (n - 1)));
        for (int n = 1; n <= 8; ++n) {
            std::int64_t free00 = 0;
            for (const auto& w : oracle::bit_words(n - 1)) free00 += oracle::count_factor(w, "00") == 0;
            CHECK(f.coeff(n, 0) == free00);
        }
        CHECK_THROWS_AS(series_by_name("nope", 3), InvalidInput);
    }

    TEST_CASE("series rows equal brute-force distributions, n <= 8")
    {
        const auto a = series_des321(8), c = series_pk321(8), f = series_ddes_132_213(8);
        for (int n = 0; n <= 8; ++n) {
            REQUIRE(series_row(a, n) == oracle::distribution("des", n, "321"));
            REQUIRE(series_row(c, n) == oracle::distribution("pk", n, "321"));
            REQUIRE(series_row(f, n) == oracle::distribution("ddes", n, "132,213"));
            REQUIRE(series_row(f, n) == oracle::distribution("dasc", n, "132,213"));
        }
    }

    TEST_CASE("B and D against Dyck statistics, n <= 8")
    {
        const auto b = series_B(9), d = series_D(9);
        for (int n = 1; n <= 9; ++n) {
            oracle::Row st_row, star_row;
            for (const auto& w : oracle::indecomposable(n)) {
                ++st_row[oracle::st(w)];
                ++star_row[oracle::st_star(w)];
            }
            REQUIRE(series_row(b, n) == st_row);
            REQUIRE(series_row(d, n) == star_row);
        }
        // [z^{n+1} q^{k+1}] B = PK231(n, k)
        for (int n = 1; n <= 8; ++n) {
            for (int k = 0; k <= n; ++k) REQUIRE(b.coeff(n + 1, k + 1) == static_cast<std::int64_t>(*closed_form(FormulaId::PK231, n, k)));
        }
    }
}
