#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "permstats/bijections.hpp"
#include "permstats/errors.hpp"
#include "permstats/stats.hpp"

using namespace permstats;

namespace {
Perm P(const char* s) { return Perm::parse(s); }
DyckWord W(const char* s) { return DyckWord::parse(s); }
Bits B(const char* s) { return Bits::parse(s); }

std::vector<Perm> cls(int n, const char* basis)
{
    std::vector<Perm> out;
    for (const auto& w : oracle::avoiders(n, basis)) out.emplace_back(w);
    return out;
}

std::string violated(const std::function<void()>& f)
{
    try {
        f();
    } catch (const PreconditionError& e) {
        return e.violated_pattern();
    }
    return "";
}

unsigned des_of(const DyckWord& d) { return stat(StatKind::des, psi321_inv(d)); }
} // namespace

TEST_SUITE("bijections")
{
    TEST_CASE("phi231 examples and domain")
    {
        CHECK(phi231(P("1")) == W("UD"));
        CHECK(phi231(Perm{}).empty());
        CHECK(phi231(P("21")) == W("UUDD"));
        CHECK(phi231(P("12")) == W("UDUD"));
        CHECK(violated([] { phi231(P("231")); }) == "231");
        CHECK(phi231_inv(W("UUDD")) == P("21"));
    }

    TEST_CASE("phi231 is a bijection carrying peaks to DUU factors, n <= 8")
    {
        for (int n = 0; n <= 8; ++n) {
            std::set<DyckWord> images;
            for (const auto& p : cls(n, "231")) {
                const DyckWord d = phi231(p);
                REQUIRE(d.semilength() == static_cast<std::size_t>(n));
                REQUIRE(phi231_inv(d) == p);
                REQUIRE(factor_count(d, "DUU") == stat(StatKind::pk, p));
                REQUIRE(factor_count(reverse_path(d), "DDU") == factor_count(d, "DUU"));
                images.insert(d);
            }
            REQUIRE(images.size() == oracle::catalan(n));
        }
    }

    TEST_CASE("psi321 examples and domain")
    {
        CHECK(psi321(P("617238459")) == W("UDUUDUDUUDUDUUDDDD"));
        CHECK(psi321_inv(W("UDUUDUDUUDUDUUDDDD")) == P("617238459"));
        CHECK(psi321(Perm::identity(4)) == W("UUUUDDDD"));
        CHECK(psi321_inv(W("UUDD")) == P("12"));
        CHECK(violated([] { psi321(P("321")); }) == "321");
        CHECK(psi_hat(P("1")) == W("UUDD"));
        CHECK(psi_hat(P("21")).str() == "U" + psi321(P("21")).str() + "D");
        CHECK(psi_hat(Perm::identity(3)) == W("UUUUDDDD"));
    }

    TEST_CASE("psi321 transports pk to st* and des to st* of psi_hat, n <= 8")
    {
        for (int n = 0; n <= 8; ++n) {
            std::set<DyckWord> images;
            for (const auto& p : cls(n, "321")) {
                const DyckWord d = psi321(p);
                REQUIRE(psi321_inv(d) == p);
                REQUIRE(st_star(d) == stat(StatKind::pk, p));
                const DyckWord h = psi_hat(p);
                REQUIRE(is_indecomposable(h));
                REQUIRE(h.semilength() == static_cast<std::size_t>(n + 1));
                REQUIRE(st_star(h) == stat(StatKind::des, p));
                images.insert(d);
            }
            REQUIRE(images.size() == oracle::catalan(n));
        }
    }

    TEST_CASE("zeta")
    {
        CHECK(zeta(Perm::identity(5)) == Perm::identity(5));
        CHECK(zeta(P("1432")) == P("1423"));
        CHECK(violated([] { zeta(P("312")); }) == "312");
        CHECK(violated([] { zeta_inv(P("321")); }) == "321");
        for (int n = 0; n <= 8; ++n) {
            for (const auto& p : cls(n, "312")) {
                const Perm q = zeta(p);
                REQUIRE(oracle::avoids(std::vector<int>(q.values().begin(), q.values().end()), {{3, 2, 1}}));
                REQUIRE(zeta_inv(q) == p);
                REQUIRE(ltr_maxima(q) == ltr_maxima(p));
                REQUIRE(stat(StatKind::pk, q) == stat(StatKind::pk, p));
            }
        }
    }

    TEST_CASE("iota reproduces the worked example")
    {
        const DyckWord d = W("UDUDUDUUDUUUUDUDDDDD");
        const DyckWord e = iota(d);
        CHECK(e == W("UUDUUUUDUUUUDDDDDDDD"));
        CHECK(st(d) == 2);
        CHECK(des_of(d) == 3);
        CHECK(st(e) == 3);
        CHECK(des_of(e) == 2);
        CHECK(iota(e) == d);
        CHECK(iota(W("UUDD")) == W("UDUD"));
        CHECK(iota(W("UD")) == W("UD"));
    }

    TEST_CASE("iota is an involution swapping the st/des off-diagonal classes, n <= 8")
    {
        for (int n = 0; n <= 8; ++n) {
            for (const auto& s : oracle::dyck(n)) {
                const DyckWord d = W(s.c_str());
                const DyckWord e = iota(d);
                REQUIRE(iota(e) == d);
                const unsigned a = static_cast<unsigned>(st(d)), b = static_cast<unsigned>(des_of(d));
                if (a == b) REQUIRE(e == d);
                if (b == a + 1) REQUIRE((st(e) == a + 1 && des_of(e) == a));
                if (a == b + 1) REQUIRE((st(e) == b && des_of(e) == b + 1));
            }
        }
    }

    TEST_CASE("encoding examples")
    {
        CHECK(enc_132_213(P("321")) == B("00"));
        CHECK(enc_132_213(P("12")) == B("1"));
        CHECK(dec_132_213(B("10")) == P("231"));
        CHECK(enc_213_231(P("312")) == B("01"));
        CHECK(enc_213_231(Perm::identity(5)) == B("1111"));
        CHECK(enc_213_231(Perm::decreasing(5)) == B("0000"));
        CHECK(enc_123_132(P("653241")) == B("11001"));
        CHECK(enc_123_132(P("1")).empty());
        CHECK(dec_123_132(B("11001")) == P("653241"));
        CHECK(dec_123_132(B("e")) == P("1"));
        CHECK(violated([] { enc_132_213(P("132")); }) == "132");
        CHECK(violated([] { enc_213_231(P("231")); }) == "231");
        CHECK(violated([] { enc_123_132(P("123")); }) == "123");
        CHECK_THROWS(enc_132_213(Perm{}));
    }

    TEST_CASE("encodings are bijections with the stated statistic transport, n <= 8")
    {
        struct Code {
            const char* basis;
            Bits (*enc)(const Perm&);
            Perm (*dec)(const Bits&);
        };
        const Code codes[] = {{"132,213", enc_132_213, dec_132_213},
                              {"213,231", enc_213_231, dec_213_231},
                              {"123,132", enc_123_132, dec_123_132}};
        for (const auto& code : codes) {
            for (int n = 1; n <= 8; ++n) {
                const auto members = cls(n, code.basis);
                REQUIRE(members.size() == (std::size_t{1} << (n - 1)));
                std::set<Bits> seen;
                for (const auto& p : members) {
                    const Bits s = code.enc(p);
                    REQUIRE(s.size() == static_cast<std::size_t>(n - 1));
                    REQUIRE(code.dec(s) == p);
                    seen.insert(s);
                    const std::string t = s.to_string();
                    const auto c = [&](const char* f) { return oracle::count_factor(t, f); };
                    const bool lead00 = t.rfind("00", 0) == 0;
                    if (std::string(code.basis) == "123,132") {
                        const unsigned asc = (!t.empty() && t[0] == '0' ? 1 : 0) + c("10");
                        REQUIRE(stat(StatKind::asc, p) == asc);
                        REQUIRE(stat(StatKind::des, p) == n - 1 - asc);
                        REQUIRE(stat(StatKind::dasc, p) == 0);
                        REQUIRE(stat(StatKind::pk, p) == c("01"));
                        REQUIRE(stat(StatKind::vl, p) == c("10") + (lead00 ? 1 : 0));
                        REQUIRE(stat(StatKind::ddes, p) == c("00") + c("11") - (lead00 ? 1 : 0));
                    } else {
                        REQUIRE(stat(StatKind::asc, p) == c("1"));
                        REQUIRE(stat(StatKind::des, p) == c("0"));
                        REQUIRE(stat(StatKind::dasc, p) == c("11"));
                        REQUIRE(stat(StatKind::ddes, p) == c("00"));
                        REQUIRE(stat(StatKind::pk, p) == c("10"));
                        REQUIRE(stat(StatKind::vl, p) == c("01"));
                    }
                }
                REQUIRE(seen.size() == members.size());
            }
        }
    }

    TEST_CASE("Bits")
    {
        CHECK(B("1101").ones() == 3);
        CHECK(B("1101").zeros() == 1);
        CHECK(B("111").factor_count("11") == 2);
        CHECK(B("e").empty());
        CHECK(B("0010").starts_with("00"));
        CHECK_THROWS_AS(B("012"), InvalidInput);
    }
}
