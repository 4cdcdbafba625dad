#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gridroots/errors.hpp"
#include "gridroots/field.hpp"

using namespace gridroots;

TEST_CASE("prime field arithmetic tables") {
    Field f = Field::prime(5);
    CHECK(f.order() == 5);
    CHECK(f.characteristic() == 5);
    CHECK(f.extension_degree() == 1);
    CHECK(f.from_int(3) + f.from_int(4) == f.from_int(2));
    CHECK(f.from_int(3) * f.from_int(4) == f.from_int(2));
    CHECK(f.from_int(-1) == f.from_int(4));
    CHECK(f.from_int(2).inverse() == f.from_int(3));
    CHECK(f.from_int(2).pow(4) == f.one());
    CHECK((f.zero() - f.from_int(1)).render() == "4");
}

TEST_CASE("every nonzero element is invertible") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
        Field f = q == 2 || q == 3 || q == 5 || q == 7 ? Field::prime(q)
                                                       : Field::extension_default(q);
        for (const FieldElem& x : f.enumerate()) {
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == f.one());
            CHECK(x.pow(static_cast<std::int64_t>(q) - 1) == f.one());
        }
    }
}

TEST_CASE("frobenius fixes the prime subfield only for e > 1") {
    Field f = Field::extension_default(8);
    int fixed = 0;
    for (const FieldElem& x : f.enumerate())
        if (x.pow(2) == x) ++fixed;
    CHECK(fixed == 2);  // GF(2) inside GF(8)
}

TEST_CASE("gf(8) with the default modulus x^3 + x + 1") {
    Field f = Field::extension_default(8);
    CHECK(f.modulus() == std::vector<std::uint64_t>{1, 0, 1, 1});
    FieldElem x = f.element_at(2);  // packed base-2 digits (0,1,0)
    CHECK((x * x * x).index() == 3);         // x^3 = x + 1
    CHECK(x.inverse().index() == 5);         // x^2 + 1
    CHECK((x.pow(7)) == f.one());
    CHECK(x.render() == "x");
    CHECK(f.element_at(7).render() == "x^2+x+1");
}

TEST_CASE("gf(4) multiplication") {
    Field f = Field::extension_default(4);
    FieldElem x = f.element_at(2);
    FieldElem x1 = f.element_at(3);  // x + 1
    CHECK(x * x1 == f.one());        // x^2 + x = 1 under x^2 + x + 1
    CHECK(x * x == x1);
}

TEST_CASE("default moduli are the first irreducibles in enumeration order") {
    CHECK(Field::extension_default(4).modulus() == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(Field::extension_default(9).modulus() == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(Field::extension_default(16).modulus() == std::vector<std::uint64_t>{1, 0, 0, 1, 1});
    CHECK(Field::extension_default(25).modulus() == std::vector<std::uint64_t>{1, 0, 2});
    CHECK(Field::extension_default(27).modulus() == std::vector<std::uint64_t>{1, 0, 2, 1});
}

TEST_CASE("explicit modulus round trip and reducible rejection") {
    Field f = Field::parse("gf(2^3):1,0,1,1");
    CHECK(f.order() == 8);
    CHECK(f == Field::extension_default(8));
    CHECK(Field::parse("gf(2^3):1,1,0,1").modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});
    CHECK_THROWS_WITH_AS(Field::extension(2, 2, {1, 0, 1}), doctest::Contains("Reducible"),
                         Error);
}

TEST_CASE("field parse and render round trips") {
    for (const char* text : {"gf(2)", "gf(7)", "gf(2^2)", "gf(3^2)", "rational"}) {
        Field f = Field::parse(text);
        CHECK(Field::parse(f.render()) == f);
    }
    CHECK(Field::parse("gf(8)") == Field::extension_default(8));
    CHECK(Field::parse("gf(4)").render() == "gf(2^2):1,1,1");
    CHECK_THROWS_AS(Field::parse("gf(6)"), Error);
    CHECK_THROWS_AS(Field::parse("gf(0)"), Error);
    CHECK_THROWS_AS(Field::parse("garbage"), Error);
}

TEST_CASE("element_at and index are inverse bijections") {
    for (std::uint64_t q : {4, 8, 9}) {
        Field f = Field::extension_default(q);
        for (std::uint64_t i = 0; i < q; ++i) CHECK(f.element_at(i).index() == i);
        CHECK(f.element_at(0).is_zero());
        CHECK(f.element_at(1).is_one());
        CHECK_THROWS_AS(f.element_at(q), Error);
    }
}

TEST_CASE("element parse and render round trip") {
    Field f = Field::extension_default(9);
    for (const FieldElem& x : f.enumerate()) CHECK(f.parse_element(x.render()) == x);
    Field q = Field::rationals();
    CHECK(q.parse_element("3/4") + q.parse_element("1/4") == q.one());
    CHECK(q.parse_element("-2/6").render() == "-1/3");
    CHECK_THROWS_AS(q.parse_element("1/0"), Error);
}

TEST_CASE("rational arithmetic is exact") {
    Field f = Field::rationals();
    CHECK(f.kind() == FieldKind::Rational);
    CHECK(!f.is_finite());
    CHECK(f.characteristic() == 0);
    FieldElem big = f.from_int(1);
    for (int i = 0; i < 40; ++i) big = big * f.from_int(10) + f.one();
    FieldElem r = big / f.from_int(7);
    CHECK(r * f.from_int(7) == big);
    CHECK_THROWS_WITH_AS(f.order(), doctest::Contains("InfiniteField"), Error);
    CHECK_THROWS_WITH_AS(f.one() / f.zero(), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("mixing elements of different fields is rejected") {
    FieldElem a = Field::prime(3).one();
    FieldElem b = Field::prime(5).one();
    CHECK_THROWS_WITH_AS(a + b, doctest::Contains("SpecMismatch"), Error);
    FieldElem c = Field::extension(2, 2, {1, 1, 1}).one();
    FieldElem d = Field::extension_default(4).one();
    CHECK_NOTHROW(c + d);  // same modulus interns to the same field
}

TEST_CASE("distributivity fuzz across kinds") {
    std::mt19937_64 rng(11);
    for (Field f : {Field::prime(7), Field::extension_default(9), Field::rationals()}) {
        for (int trial = 0; trial < 200; ++trial) {
            auto pick = [&]() {
                return f.from_int(static_cast<std::int64_t>(rng() % 19) - 9);
            };
            FieldElem a = pick(), b = pick(), c = pick();
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) - b == a);
        }
    }
}
