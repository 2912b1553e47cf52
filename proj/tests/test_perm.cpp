#include "doctest.h"
#include "oracles.hpp"
#include "permstats/errors.hpp"
#include "permstats/perm.hpp"

using namespace permstats;

namespace {
Perm P(const char* s) { return Perm::parse(s); }
std::vector<int> V(const Perm& p) { return {p.values().begin(), p.values().end()}; }
} // namespace

TEST_SUITE("perm")
{
    TEST_CASE("reduce gives the order-isomorphic permutation")
    {
        CHECK(reduce(std::vector<int>{8, 7, 4, 5}) == P("4312"));
        CHECK(reduce(std::vector<int>{1}) == P("1"));
        CHECK(reduce(std::vector<int>{2, 4, 6}) == P("123"));
        CHECK(reduce(std::vector<int>{}).empty());
        CHECK_THROWS_AS(reduce(std::vector<int>{3, 1, 3}), InvalidInput);
    }

    TEST_CASE("construction and parsing validate")
    {
        CHECK_THROWS_AS(Perm(std::vector<int>{1, 1}), InvalidInput);
        CHECK_THROWS_AS(Perm(std::vector<int>{0, 1}), InvalidInput);
        CHECK_THROWS_AS(P("124"), InvalidInput);
        CHECK_THROWS_AS(P("1a2"), InvalidInput);
        CHECK(P("e").empty());
        CHECK(P("").empty());
        CHECK(Perm::parse("10,2,1,3,4,5,6,7,8,9").size() == 10);
        CHECK(Perm::parse("10,2,1,3,4,5,6,7,8,9").to_string() == "10,2,1,3,4,5,6,7,8,9");
        CHECK(P("4312").to_string() == "4312");
        CHECK(P("4312").at(1) == 4);
        CHECK(Perm::identity(3) == P("123"));
        CHECK(Perm::decreasing(3) == P("321"));
    }

    TEST_CASE("containment examples")
    {
        CHECK(contains(P("18274635"), P("4312")));
        CHECK_FALSE(contains(P("123"), P("21")));
        CHECK_FALSE(contains(P("617238459"), P("321")));
        CHECK(contains(P("123"), P("1")));
        CHECK(contains(P("1"), P("1")));
        CHECK_FALSE(contains(Perm{}, P("1")));
    }

    TEST_CASE("containment agrees with subset enumeration")
    {
        const std::vector<const char*> patterns{"1", "12", "21", "123", "132", "213", "231", "312", "321", "1324",
                                                "2413", "4321", "12345"};
        for (int n = 0; n <= 6; ++n) {
            for (const auto& host : oracle::perms(n)) {
                for (const char* pat : patterns) {
                    const auto pw = oracle::digits(pat);
                    CHECK(contains(Perm(host), P(pat)) == oracle::contains(host, pw));
                }
            }
        }
    }

    TEST_CASE("avoids_all")
    {
        CHECK(avoids_all(P("312"), PatternSet::parse("213,231")));
        CHECK_FALSE(avoids_all(P("231"), PatternSet::parse("213,231")));
        CHECK(avoids_all(Perm{}, PatternSet::parse("1")));
        CHECK(avoids_all(Perm{}, PatternSet::parse("123,321")));
    }

    TEST_CASE("reverse, complement and sums")
    {
        CHECK(reverse(P("123")) == P("321"));
        CHECK(complement(P("132")) == P("312"));
        CHECK(reverse(complement(P("231"))) == P("312"));
        CHECK(direct_sum(P("21"), P("1")) == P("213"));
        CHECK(skew_sum(P("1"), P("12")) == P("312"));
        CHECK(skew_sum(P("12"), P("12")) == P("3412"));
        CHECK(direct_sum(Perm{}, P("21")) == P("21"));
    }

    TEST_CASE("left-to-right maxima")
    {
        CHECK(ltr_maxima(P("32658741")) == std::vector<Point>{{1, 3}, {3, 6}, {5, 8}});
        CHECK(ltr_maxima(P("123")) == std::vector<Point>{{1, 1}, {2, 2}, {3, 3}});
        CHECK(ltr_maxima(P("617238459")) == std::vector<Point>{{1, 6}, {3, 7}, {6, 8}, {9, 9}});
        CHECK(ltr_maxima(Perm{}).empty());
    }

    TEST_CASE("pattern sets are canonical")
    {
        const auto a = PatternSet::parse("213,132");
        CHECK(a.to_string() == "132,213");
        CHECK(a == PatternSet::parse("132,213"));
        CHECK(PatternSet::parse("12,1").to_string() == "1,12");
        CHECK_THROWS_AS(PatternSet::parse("132,132"), InvalidInput);
        CHECK_THROWS_AS(PatternSet::parse(""), InvalidInput);
        CHECK_THROWS_AS(PatternSet::parse("1,,2"), InvalidInput);
        CHECK_THROWS_AS(PatternSet::parse("1234567890"), InvalidInput);
        CHECK(PatternSet::parse("132,213").reversed().to_string() == "231,312");
        CHECK(PatternSet::parse("132,213").complemented().to_string() == "231,312");
        CHECK(PatternSet::parse("231").reversed().to_string() == "132");
    }

    TEST_CASE("reduction of random-looking words matches sorting")
    {
        const std::vector<std::vector<int>> words{{10, -3, 7, 0}, {5, 4, 3, 2, 1}, {100, 1, 50}};
        for (const auto& w : words) {
            const auto r = V(reduce(w));
            for (std::size_t i = 0; i < w.size(); ++i) {
                for (std::size_t j = 0; j < w.size(); ++j) CHECK((w[i] < w[j]) == (r[i] < r[j]));
            }
        }
    }
}
