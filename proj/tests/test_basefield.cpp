#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace ruledres;
using testutil::Rng;
using testutil::rand_elem;
using testutil::rand_int;
using testutil::rand_unit_or_deeper;

static const BaseFieldDesc Q3 = BaseFieldDesc::rat_qadic(3);
static const BaseFieldDesc QT = BaseFieldDesc::ratfunc_tadic();

TEST_CASE("value: q-adic and T-adic") {
    CHECK(value(Q3, BaseElem(18L)) == ExtRat(2));
    CHECK(value(Q3, BaseElem()) == ExtRat::inf());
    CHECK(value(QT, BaseElem()) == ExtRat::inf());
    CHECK(value(QT, parse_elem(QT, "T^5 - T^10")) == ExtRat(5));
    CHECK(value(Q3, BaseElem(mpq_class(5, 27))) == ExtRat(-3));
    CHECK(value(QT, parse_elem(QT, "(T^2+T^3)/T^5")) == ExtRat(-3));
}

TEST_CASE("residue") {
    CHECK(residue(QT, parse_elem(QT, "(T^5+4)/(-5)")) == ResElem::in_q(mpq_class(-4, 5)));
    CHECK(residue(Q3, BaseElem(9L)) == ResElem::in_fq(0, 3));
    CHECK(residue(Q3, BaseElem(5L)) == ResElem::in_fq(2, 3));
    CHECK_THROWS(residue(Q3, BaseElem(mpq_class(1, 3))));
    CHECK_THROWS(residue(QT, parse_elem(QT, "1/T")));
}

TEST_CASE("elem_with_value") {
    CHECK(elem_with_value(QT, ExtRat(-3)) == parse_elem(QT, "1/T^3"));
    CHECK(elem_with_value(QT, ExtRat(0)) == BaseElem(1L));
    CHECK(elem_with_value(Q3, ExtRat(0)) == BaseElem(1L));
    CHECK(elem_with_value(BaseFieldDesc::rat_qadic(5), ExtRat(2)) == BaseElem(25L));
    CHECK_THROWS(elem_with_value(QT, ExtRat(1, 2)));
}

TEST_CASE("parse_elem golden") {
    CHECK(parse_elem(QT, "T^5 - T^10") ==
          BaseElem(QPoly::monomial(1, 5) - QPoly::monomial(1, 10), QPoly(mpq_class(1))));
    CHECK(parse_elem(QT, "0").is_zero());
    // denominator normalized monic, sign pushed into the numerator
    BaseElem x = parse_elem(QT, "(T^5+4)/(-5*T)");
    CHECK(x.den() == QPoly::monomial(1, 1));
    CHECK(x.num() == (QPoly::monomial(1, 5) + QPoly(mpq_class(4))).scaled(mpq_class(-1, 5)));
    CHECK(parse_elem(Q3, "2^-2") == BaseElem(mpq_class(1, 4)));
    CHECK_THROWS_AS(parse_elem(Q3, "T"), ParseError);
    CHECK_THROWS_AS(parse_elem(QT, "X + 1"), ParseError);
    CHECK_THROWS_AS(parse_elem(QT, "1/0"), ParseError);
    CHECK_THROWS_AS(parse_elem(QT, "1 +"), ParseError);
}

TEST_CASE("property: valuation axioms") {
    Rng rng(101);
    for (const auto* K0 : {&Q3, &QT}) {
        for (int it = 0; it < 1000; ++it) {
            BaseElem x = rand_elem(rng, *K0), y = rand_elem(rng, *K0);
            ExtRat vx = value(*K0, x), vy = value(*K0, y);
            REQUIRE(value(*K0, x * y) == vx + vy);
            REQUIRE(value(*K0, x + y) >= min(vx, vy));
        }
    }
}

TEST_CASE("property: residue is a ring homomorphism on the valuation ring") {
    Rng rng(103);
    for (const auto* K0 : {&Q3, &QT}) {
        for (int it = 0; it < 1000; ++it) {
            BaseElem x = rand_unit_or_deeper(rng, *K0), y = rand_unit_or_deeper(rng, *K0);
            REQUIRE(residue(*K0, x * y) == residue(*K0, x) * residue(*K0, y));
            REQUIRE(residue(*K0, x + y) == residue(*K0, x) + residue(*K0, y));
        }
    }
}

TEST_CASE("property: residue vanishes exactly above value zero") {
    Rng rng(107);
    for (const auto* K0 : {&Q3, &QT}) {
        for (int it = 0; it < 1000; ++it) {
            BaseElem x = rand_unit_or_deeper(rng, *K0);
            REQUIRE(residue(*K0, x).is_zero() == (value(*K0, x) > ExtRat(0)));
        }
    }
}

TEST_CASE("property: elem_with_value hits every integer value") {
    for (const auto* K0 : {&Q3, &QT}) {
        for (long w = -20; w <= 20; ++w)
            REQUIRE(value(*K0, elem_with_value(*K0, ExtRat(w))) == ExtRat(w));
    }
}

TEST_CASE("property: parse after serialize is the identity") {
    Rng rng(109);
    for (const auto* K0 : {&Q3, &QT}) {
        for (int it = 0; it < 500; ++it) {
            BaseElem x = rand_elem(rng, *K0);
            REQUIRE(parse_elem(*K0, x.str()) == x);
        }
    }
}
