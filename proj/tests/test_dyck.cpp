#include "doctest.h"
#include "oracles.hpp"
#include "permstats/dyck.hpp"
#include "permstats/errors.hpp"
#include "permstats/generators.hpp"

using namespace permstats;

namespace {
DyckWord W(const char* s) { return DyckWord::parse(s); }

std::size_t error_index(const char* text)
{
    try {
        DyckWord::parse(text);
    } catch (const InvalidDyck& e) {
        return e.index();
    }
    return static_cast<std::size_t>(-1);
}
} // namespace

TEST_SUITE("dyck")
{
    TEST_CASE("parse")
    {
        CHECK(W("UD").semilength() == 1);
        CHECK(W("UDUUDUDUUDUDUUDDDD").semilength() == 9);
        CHECK(W("").empty());
        CHECK(error_index("DU") == 0);
        CHECK(error_index("UDD") == 2);
        CHECK(error_index("UUD") == 3);
        CHECK(error_index("UxD") == 1);
        CHECK(DyckWord::parse("1100", kBinaryAlphabet) == W("UUDD"));
        CHECK(W("UUDD").to_string(kBinaryAlphabet) == "1100");
    }

    TEST_CASE("a negative prefix is reported at the step that goes below the axis")
    {
        // "DU" first dips at its opening step.
        CHECK_THROWS_AS(W("DU"), InvalidDyck);
        CHECK(error_index("UDDU") == 2);
    }

    TEST_CASE("factor counts overlap")
    {
        CHECK(factor_count(W("UUDD"), "UUD") == 1);
        CHECK(factor_count(W("UDUDUD"), "DU") == 2);
        CHECK(factor_count(W("UUUDDD"), "UU") == 2);
    }

    TEST_CASE("st and st*")
    {
        CHECK(st(W("UUUDDDUD")) == 1);
        CHECK(st_star(W("UUUDDDUD")) == 1);
        CHECK(st(W("UUUDDDUUDD")) == 2);
        CHECK(st_star(W("UUUDDDUUDD")) == 1);
        CHECK(st(W("UUDD")) == 1);
        CHECK(st_star(W("UUDD")) == 0);
        CHECK(st_star(DyckWord{}) == 0);
    }

    TEST_CASE("st and st* agree with direct counts, n <= 8")
    {
        for (int n = 0; n <= 8; ++n) {
            for (const auto& s : oracle::dyck(n)) {
                const DyckWord d = W(s.c_str());
                REQUIRE(st(d) == oracle::st(s));
                REQUIRE(st_star(d) == oracle::st_star(s));
                REQUIRE(factor_count(d, "DU") == oracle::count_factor(s, "DU"));
            }
        }
    }

    TEST_CASE("decomposition")
    {
        CHECK(decompose(W("UDUUDD")) == std::vector<DyckWord>{W("UD"), W("UUDD")});
        CHECK(decompose(W("UUDUDD")) == std::vector<DyckWord>{W("UUDUDD")});
        CHECK(decompose(DyckWord{}).empty());
        CHECK(is_indecomposable(W("UUDUDD")));
        CHECK_FALSE(is_indecomposable(W("UDUD")));
        CHECK_FALSE(is_indecomposable(DyckWord{}));
        for (int n = 0; n <= 7; ++n) {
            for (const auto& s : oracle::dyck(n)) {
                const DyckWord d = W(s.c_str());
                DyckWord joined;
                for (const auto& part : decompose(d)) {
                    REQUIRE(is_indecomposable(part));
                    joined = joined + part;
                }
                REQUIRE(joined == d);
            }
        }
    }

    TEST_CASE("reverse_path")
    {
        CHECK(reverse_path(W("UUDD")) == W("UUDD"));
        CHECK(reverse_path(W("UDUD")) == W("UDUD"));
        CHECK(reverse_path(W("UUDDUD")) == W("UDUUDD"));
    }
}
