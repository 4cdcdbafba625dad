#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "gridroots/poly.hpp"

using namespace gridroots;

namespace {

Monomial M(std::string_view text, int dim = 2) { return Monomial::parse_text(text, dim); }

Polynomial random_poly(const Field& f, std::mt19937_64& rng, int dim, int max_exp, int terms) {
    Polynomial p(f, dim);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(dim);
        for (int& v : e) v = static_cast<int>(rng() % (max_exp + 1));
        p.set_coeff(Monomial(e), f.element_at(rng() % f.order()));
    }
    return p;
}

}  // namespace

TEST_CASE("grid construction and point order") {
    Field f = Field::prime(3);
    CartesianGrid g = CartesianGrid::full(f, 2);
    CHECK(g.size() == 9);
    CHECK(g.box() == BoxRegion({3, 3}));
    std::vector<std::vector<FieldElem>> pts = g.points();
    // Last coordinate fastest.
    CHECK(pts[0] == std::vector<FieldElem>{f.from_int(0), f.from_int(0)});
    CHECK(pts[1] == std::vector<FieldElem>{f.from_int(0), f.from_int(1)});
    CHECK(pts[3] == std::vector<FieldElem>{f.from_int(1), f.from_int(0)});
    CHECK(g.contains(pts[7]));

    CartesianGrid pre = CartesianGrid::prefix(f, {2, 3});
    CHECK(pre.size() == 6);
    CHECK(pre.coordinate_set(0).size() == 2);

    CHECK_THROWS_AS(CartesianGrid(f, {{f.one(), f.one()}}), Error);  // duplicate coordinate
    CHECK_THROWS_AS(CartesianGrid::full(Field::rationals(), 1), Error);
}

TEST_CASE("point sets reject duplicates") {
    Field f = Field::prime(2);
    CHECK_THROWS_WITH_AS(PointSet(f, 1, {{f.one()}, {f.one()}}),
                         doctest::Contains("DuplicatePoints"), Error);
    CHECK(PointSet::empty(f, 3).size() == 0);
}

TEST_CASE("polynomial parse and text round trip") {
    Field f = Field::prime(5);
    Polynomial p = parse_polynomial(f, 2, "X1^3*X2 + 2*X2^2 + 4");
    CHECK(p.term_count() == 3);
    CHECK(p.coeff(M("X1^3*X2")) == f.one());
    CHECK(p.coeff(M("X2^2")) == f.from_int(2));
    CHECK(p.coeff(M("1")) == f.from_int(4));
    CHECK(parse_polynomial(f, 2, p.text()) == p);
    CHECK(parse_polynomial(f, 2, "X1 - X1").is_zero());
    CHECK(parse_polynomial(f, 2, "3*X1 + 3*X1") == parse_polynomial(f, 2, "X1").scaled(f.one()));

    Field e = Field::extension_default(4);
    Polynomial q = parse_polynomial(e, 1, "(x+1)*X1 + x");
    CHECK(q.coeff(Monomial({1})) == e.element_at(3));
    CHECK(parse_polynomial(e, 1, q.text()) == q);
}

TEST_CASE("degrees and leading data") {
    Field f = Field::prime(7);
    Polynomial p = parse_polynomial(f, 2, "3*X1^2*X2 + X2^4 + 1");
    CHECK(p.total_degree() == 4);
    CHECK(p.partial_degree(0) == 2);
    CHECK(p.partial_degree(1) == 4);
    MonomialOrder dl = MonomialOrder::parse("deglex:X1<X2");
    CHECK(p.leading_monomial(dl) == M("X2^4"));
    MonomialOrder lex21 = MonomialOrder::parse("lex:X2<X1");
    CHECK(p.leading_monomial(lex21) == M("X1^2*X2"));
    CHECK(p.monic(dl).leading_coefficient(dl).is_one());
    CHECK(Polynomial(f, 2).total_degree() == -1);
    CHECK_THROWS_WITH_AS(Polynomial(f, 2).leading_monomial(dl),
                         doctest::Contains("ZeroPolynomial"), Error);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(99);
    for (const Field& f : {Field::prime(5), Field::extension_default(8)}) {
        CartesianGrid g = CartesianGrid::full(f, 2);
        for (int trial = 0; trial < 40; ++trial) {
            Polynomial a = random_poly(f, rng, 2, 3, 4);
            Polynomial b = random_poly(f, rng, 2, 3, 4);
            std::vector<FieldElem> pt = {f.element_at(rng() % f.order()),
                                         f.element_at(rng() % f.order())};
            CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
            CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        }
        Polynomial a = random_poly(f, rng, 2, 4, 5);
        std::vector<FieldElem> direct;
        for (const std::vector<FieldElem>& pt : g.points()) direct.push_back(a.evaluate(pt));
        CHECK(a.evaluate_on(g) == direct);
    }
}

TEST_CASE("grid generators expand the coordinate products") {
    Field f = Field::prime(5);
    CartesianGrid g(f, {{f.from_int(1), f.from_int(2), f.from_int(3)}});
    std::vector<Polynomial> gens = grid_generators(g);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == parse_polynomial(f, 1, "X1^3 + 4*X1^2 + X1 + 4"));
    CartesianGrid full = CartesianGrid::full(f, 2);
    for (const Polynomial& gen : grid_generators(full))
        for (const FieldElem& v : gen.evaluate_on(full)) CHECK(v.is_zero());
}

TEST_CASE("reduce leaves remainders supported inside the box") {
    std::mt19937_64 rng(4);
    MonomialOrder dl = MonomialOrder::parse("deglex:X1<X2");
    for (const Field& f : {Field::prime(2), Field::prime(3), Field::extension_default(4)}) {
        CartesianGrid g = CartesianGrid::full(f, 2);
        std::vector<Polynomial> gens = grid_generators(g);
        BoxRegion box = g.box();
        for (int trial = 0; trial < 50; ++trial) {
            Polynomial p = random_poly(f, rng, 2, static_cast<int>(f.order()) + 2, 5);
            Polynomial r = reduce(p, gens, dl);
            for (const auto& [mon, c] : r.terms()) {
                CHECK(box.contains(mon));
                CHECK(!c.is_zero());
            }
            // Reduction preserves the evaluation on the grid.
            CHECK(r.evaluate_on(g) == p.evaluate_on(g));
            // Generator order cannot matter for these generators.
            std::vector<Polynomial> rev(gens.rbegin(), gens.rend());
            CHECK(reduce(p, rev, dl) == r);
        }
    }
}

TEST_CASE("reduction is the unique box interpolant") {
    // Two reduced polynomials agreeing on the whole grid are equal, so the
    // remainder is the canonical representative.
    Field f = Field::extension_default(4);
    CartesianGrid g = CartesianGrid::full(f, 2);
    std::vector<Polynomial> gens = grid_generators(g);
    MonomialOrder dl = MonomialOrder::parse("deglex:X1<X2");
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial p = random_poly(f, rng, 2, 6, 4);
        Polynomial q = random_poly(f, rng, 2, 3, 3);
        Polynomial sum_then_reduce = reduce(p + q, gens, dl);
        Polynomial reduce_then_sum = reduce(p, gens, dl) + reduce(q, gens, dl);
        CHECK(sum_then_reduce == reduce(reduce_then_sum, gens, dl));
    }
    CHECK_THROWS_WITH_AS(reduce(parse_polynomial(f, 2, "X1"), {Polynomial(f, 2)}, dl),
                         doctest::Contains("ZeroGenerator"), Error);
}

TEST_CASE("witness polynomials meet the footprint bound exactly") {
    for (const Field& f : {Field::extension_default(4), Field::prime(5)}) {
        for (int c1 = 1; c1 <= 4; ++c1) {
            for (int c2 = 1; c2 <= 4; ++c2) {
                if (c1 > static_cast<int>(f.order()) || c2 > static_cast<int>(f.order()))
                    continue;
                CartesianGrid g = CartesianGrid::prefix(f, {c1, c2});
                for (const Monomial& n : g.box().members()) {
                    Polynomial h = witness_polynomial(g, n);
                    RootCount rc = count_common_roots({h}, g);
                    CHECK(rc.non_roots == sigma_enumerate(g.box(), {n}));
                    CHECK(rc.roots == g.size() - sigma_enumerate(g.box(), {n}));
                }
            }
        }
    }
}

TEST_CASE("joint witness families hit sigma exactly") {
    Field f = Field::prime(5);
    CartesianGrid g = CartesianGrid::prefix(f, {3, 3});
    std::vector<Monomial> mem = g.box().members();
    for (std::size_t i = 0; i < mem.size(); ++i) {
        for (std::size_t j = i + 1; j < mem.size(); ++j) {
            std::vector<Polynomial> hs = {witness_polynomial(g, mem[i]),
                                          witness_polynomial(g, mem[j])};
            RootCount rc = count_common_roots(hs, g);
            CHECK(rc.non_roots == sigma_enumerate(g.box(), {mem[i], mem[j]}));
        }
    }
}

TEST_CASE("hermitian root counts") {
    // X1^(q+1) - X2^q - X2 over GF(q^2)^2 has exactly q^3 roots.
    for (int q : {2, 3}) {
        Field f = Field::extension_default(static_cast<std::uint64_t>(q) * q);
        CartesianGrid g = CartesianGrid::full(f, 2);
        Polynomial h(f, 2);
        h.set_coeff(Monomial({q + 1, 0}), f.one());
        h.set_coeff(Monomial({0, q}), -f.one());
        h.set_coeff(Monomial({0, 1}), -f.one());
        RootCount rc = count_common_roots({h}, g);
        CHECK(rc.roots == static_cast<long long>(q) * q * q);
        CHECK(rc.roots + rc.non_roots == g.size());
    }
}

TEST_CASE("cross field inputs are rejected") {
    Field f2 = Field::prime(2), f3 = Field::prime(3);
    Polynomial p(f2, 1);
    p.set_coeff(Monomial({1}), f2.one());
    CHECK_THROWS_WITH_AS(p.evaluate({f3.one()}), doctest::Contains("SpecMismatch"), Error);
    CHECK_THROWS_AS(p.set_coeff(Monomial({2}), f3.one()), Error);
}
