#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "permstats/errors.hpp"
#include "permstats/generators.hpp"

using namespace permstats;

namespace {
std::vector<std::vector<int>> as_words(const std::vector<Perm>& ps)
{
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) out.emplace_back(p.values().begin(), p.values().end());
    return out;
}
} // namespace

TEST_SUITE("generators")
{
    TEST_CASE("gen_all sizes and order")
    {
        CHECK(gen_all(0).collect() == std::vector<Perm>{Perm{}});
        CHECK(gen_all(3).count() == 6);
        CHECK(gen_all(8).count() == 40320);
        const auto all5 = gen_all(5).collect();
        CHECK(std::is_sorted(all5.begin(), all5.end()));
        CHECK(as_words(all5) == oracle::perms(5));
        CHECK_THROWS_AS(gen_all(11), ResourceLimit);
        CHECK(gen_all(11, Limits{11, 14, 30, 24}).next().has_value());
    }

    TEST_CASE("first-entry partitions cover gen_all in order")
    {
        std::vector<Perm> joined;
        for (int first = 1; first <= 5; ++first) {
            for (const auto& p : gen_all_starting_with(5, first).collect()) {
                CHECK(p.at(1) == first);
                joined.push_back(p);
            }
        }
        CHECK(joined == gen_all(5).collect());
        CHECK_THROWS_AS(gen_all_starting_with(3, 4), InvalidInput);
    }

    TEST_CASE("class sizes")
    {
        CHECK(gen_class({4, PatternSet::parse("321"), GenMethod::filter}).count() == 14);
        CHECK(gen_class({5, PatternSet::parse("213,312"), GenMethod::filter}).count() == 16);
        CHECK(gen_class({5, PatternSet::parse("132,321"), GenMethod::filter}).count() == 11);
        for (int n = 5; n <= 8; ++n) CHECK(gen_class({static_cast<std::size_t>(n), PatternSet::parse("123,321"), GenMethod::filter}).count() == 0);
    }

    TEST_CASE("filter generation equals the oracle class, n <= 7")
    {
        for (const char* basis : {"123", "231", "321", "132,213", "123,132", "1324", "2413,3142"}) {
            for (int n = 0; n <= 7; ++n) {
                const auto got = gen_class({static_cast<std::size_t>(n), PatternSet::parse(basis), GenMethod::filter}).collect();
                REQUIRE(as_words(got) == oracle::avoiders(n, basis));
            }
        }
    }

    TEST_CASE("structured generators agree with filtering and never repeat, n <= 8")
    {
        const auto bases = structured_bases();
        CHECK(bases.size() == 7);
        for (const auto& basis : bases) {
            CHECK(has_structured_generator(basis));
            for (std::size_t n = 0; n <= 8; ++n) {
                auto built = gen_class({n, basis, GenMethod::structured}).collect();
                std::sort(built.begin(), built.end());
                REQUIRE(std::adjacent_find(built.begin(), built.end()) == built.end());
                REQUIRE(built == gen_class({n, basis, GenMethod::filter}).collect());
            }
        }
        CHECK_FALSE(has_structured_generator(PatternSet::parse("123")));
        CHECK_THROWS_AS(gen_class({4, PatternSet::parse("123"), GenMethod::structured}), Unsupported);
    }

    TEST_CASE("Dyck words")
    {
        CHECK(gen_dyck(3).count() == 5);
        CHECK(gen_dyck(0).collect() == std::vector<DyckWord>{DyckWord{}});
        CHECK(gen_indec(3).count() == 2);
        CHECK(gen_indec(0).count() == 0);
        for (int n = 0; n <= 8; ++n) {
            std::vector<std::string> words;
            gen_dyck(n).for_each([&](const DyckWord& d) { words.push_back(d.str()); });
            REQUIRE(words == oracle::dyck(n));
            std::vector<std::string> indec;
            gen_indec(n).for_each([&](const DyckWord& d) { indec.push_back(d.str()); });
            REQUIRE(indec == oracle::indecomposable(n));
        }
        CHECK_THROWS_AS(gen_dyck(15), ResourceLimit);
    }

    TEST_CASE("binary words")
    {
        CHECK(gen_bits(0).collect() == std::vector<Bits>{Bits{}});
        CHECK(gen_bits(1).collect() == std::vector<Bits>{Bits::parse("0"), Bits::parse("1")});
        CHECK(gen_bits(4).count() == 16);
        std::vector<std::string> words;
        gen_bits(6).for_each([&](const Bits& b) { words.push_back(b.to_string()); });
        CHECK(words == oracle::bit_words(6));
        CHECK_THROWS_AS(gen_bits(31), ResourceLimit);
    }
}
