#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ruledres/extrat.hpp"
#include "testutil.hpp"

using namespace ruledres;
using testutil::Rng;
using testutil::rand_int;
using testutil::rand_rat;

TEST_CASE("ExtRat arithmetic and ordering") {
    ExtRat a(3, 2), b(-1, 5), inf = ExtRat::inf();

    CHECK((a + b) == ExtRat(13, 10));
    CHECK((a - b) == ExtRat(17, 10));
    CHECK((a + inf) == inf);
    CHECK((inf + inf) == inf);
    CHECK(min(inf, a) == a);
    CHECK(mpq_class(2) * a == ExtRat(3));
    CHECK(mpq_class(3) * inf == inf);

    CHECK(a < inf);
    CHECK(inf > b);
    CHECK(!(inf < inf));
    CHECK(inf == inf);
    CHECK(a != b);

    CHECK_THROWS_AS(inf - inf, std::domain_error);
    CHECK_THROWS_AS(-inf, std::domain_error);
    CHECK_THROWS_AS(mpq_class(0) * inf, std::domain_error);
    CHECK_THROWS_AS(mpq_class(-1) * inf, std::domain_error);
    CHECK_THROWS_AS(ExtRat(1, 0), std::domain_error);
}

TEST_CASE("ExtRat serialization round-trip") {
    CHECK(ExtRat(3, 2).str() == "3/2");
    CHECK(ExtRat(-7).str() == "-7");
    CHECK(ExtRat::inf().str() == "inf");
    CHECK(ExtRat::parse("3/2") == ExtRat(3, 2));
    CHECK(ExtRat::parse("-4/6") == ExtRat(-2, 3));
    CHECK(ExtRat::parse("inf") == ExtRat::inf());
    CHECK_THROWS(ExtRat::parse("3/2/5"));
    CHECK_THROWS(ExtRat::parse(""));
    CHECK_THROWS(ExtRat::parse("x"));
}

TEST_CASE("group_from_generators canonicalizes") {
    CHECK(RatGroup::from_generators({}).is_zero());
    CHECK(RatGroup::from_generators({ExtRat(1), ExtRat(1, 5)}) == RatGroup(mpq_class(1, 5)));
    CHECK(RatGroup::from_generators({ExtRat(2, 3), ExtRat(1, 2)}) == RatGroup(mpq_class(1, 6)));
    CHECK_THROWS(RatGroup::from_generators({ExtRat::inf()}));
}

TEST_CASE("group membership") {
    RatGroup z(mpq_class(1));
    CHECK(!z.contains(ExtRat(-1, 5)));
    CHECK(z.contains(ExtRat(0)));
    CHECK(RatGroup().contains(ExtRat(0)));
    CHECK(RatGroup(mpq_class(1, 6)).contains(ExtRat(5, 3)));
    CHECK_THROWS(z.contains(ExtRat::inf()));
}

TEST_CASE("group equality") {
    RatGroup a = RatGroup::from_generators({ExtRat(1), ExtRat(1, 5)});
    RatGroup b = RatGroup::from_generators({ExtRat(1), ExtRat(2, 5)});
    CHECK(a == b);
    CHECK(RatGroup(mpq_class(1)) == RatGroup(mpq_class(1)));
    CHECK(RatGroup(mpq_class(1)) != RatGroup(mpq_class(1, 2)));
}

TEST_CASE("order_mod") {
    RatGroup z(mpq_class(1));
    CHECK(z.order_mod(ExtRat(3, 2)) == 2);
    CHECK(z.order_mod(ExtRat(4)) == 1);
    CHECK(RatGroup(mpq_class(1, 2)).order_mod(ExtRat(3, 4)) == 2);
    CHECK_THROWS(RatGroup().order_mod(ExtRat(1, 2)));
}

TEST_CASE("property: subgroup closure under subtraction") {
    Rng rng(20260824);
    for (int it = 0; it < 1000; ++it) {
        std::vector<ExtRat> gens;
        int n = static_cast<int>(rand_int(rng, 1, 4));
        for (int i = 0; i < n; ++i) gens.push_back(ExtRat(rand_rat(rng)));
        RatGroup g = RatGroup::from_generators(gens);
        // random members: integer combinations of the generators
        mpq_class x = 0, y = 0;
        for (const auto& e : gens) {
            x += rand_int(rng, -5, 5) * e.rat();
            y += rand_int(rng, -5, 5) * e.rat();
        }
        REQUIRE(g.contains(ExtRat(x)));
        REQUIRE(g.contains(ExtRat(y)));
        REQUIRE(g.contains(ExtRat(mpq_class(x - y))));
    }
}

TEST_CASE("property: order_mod is minimal") {
    Rng rng(7);
    for (int it = 0; it < 1000; ++it) {
        RatGroup g(rand_rat(rng, 8, 4));
        if (g.is_zero()) continue;
        ExtRat gamma(rand_rat(rng, 10, 6));
        long e = g.order_mod(gamma);
        REQUIRE(g.contains(mpq_class(e) * gamma));
        for (long k = 1; k < e; ++k) REQUIRE(!g.contains(mpq_class(k) * gamma));
    }
}

TEST_CASE("property: join absorbs exactly the members") {
    Rng rng(11);
    for (int it = 0; it < 1000; ++it) {
        std::vector<ExtRat> gens;
        int n = static_cast<int>(rand_int(rng, 0, 3));
        for (int i = 0; i < n; ++i) gens.push_back(ExtRat(rand_rat(rng)));
        RatGroup g = RatGroup::from_generators(gens);
        ExtRat x(rand_rat(rng));
        std::vector<ExtRat> more = gens;
        more.push_back(x);
        RatGroup joined = RatGroup::from_generators(more);
        REQUIRE((joined == g) == g.contains(x));
        REQUIRE(joined == g.joined_with(x.rat()));
    }
}

TEST_CASE("property: group equality is an equivalence relation") {
    Rng rng(13);
    for (int it = 0; it < 1000; ++it) {
        RatGroup a(rand_rat(rng, 6, 4)), b(rand_rat(rng, 6, 4)), c(rand_rat(rng, 6, 4));
        REQUIRE(a == a);
        REQUIRE((a == b) == (b == a));
        if (a == b && b == c) REQUIRE(a == c);
    }
}
