#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "gridroots/codes.hpp"

using namespace gridroots;

namespace {

Monomial M(std::string_view text, int dim = 2) { return Monomial::parse_text(text, dim); }

std::vector<FieldElem> word(const Field& f, std::initializer_list<int> vals) {
    std::vector<FieldElem> w;
    for (int v : vals) w.push_back(f.from_int(v));
    return w;
}

LinearCode random_code(const Field& f, std::mt19937_64& rng, std::size_t n) {
    std::size_t k = rng() % (n + 1);
    std::vector<std::vector<FieldElem>> rows;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<FieldElem> r;
        for (std::size_t j = 0; j < n; ++j) r.push_back(f.element_at(rng() % f.order()));
        rows.push_back(std::move(r));
    }
    return LinearCode(f, n, rows);
}

// All divisor-closed subsets of the box, by upward closure check.
std::vector<std::vector<Monomial>> divisor_closed_subsets(const BoxRegion& box) {
    std::vector<Monomial> mem = box.members();
    std::vector<std::vector<Monomial>> out;
    std::size_t total = static_cast<std::size_t>(1) << mem.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<Monomial> w;
        for (std::size_t i = 0; i < mem.size(); ++i)
            if (mask >> i & 1) w.push_back(mem[i]);
        bool closed = true;
        for (const Monomial& m : w)
            for (const Monomial& d : mem)
                if (d.divides(m) &&
                    std::find(w.begin(), w.end(), d) == w.end())
                    closed = false;
        if (closed) out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

TEST_CASE("linear code canonicalization and membership") {
    Field f = Field::prime(2);
    LinearCode c(f, 3, {word(f, {1, 1, 0}), word(f, {1, 1, 0}), word(f, {0, 0, 1})});
    CHECK(c.dim() == 2);
    CHECK(c.length() == 3);
    CHECK(c.contains(word(f, {1, 1, 1})));
    CHECK(!c.contains(word(f, {1, 0, 0})));
    LinearCode zero(f, 3, {});
    CHECK(zero.dim() == 0);
    CHECK(zero.subcode_of(c));
    CHECK(c == LinearCode(f, 3, {word(f, {1, 1, 1}), word(f, {0, 0, 1})}));
}

TEST_CASE("dual code relations") {
    std::mt19937_64 rng(17);
    for (const Field& f : {Field::prime(2), Field::prime(3), Field::extension_default(4)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 1 + rng() % 6;
            LinearCode c = random_code(f, rng, n);
            LinearCode d = dual_code(c);
            CHECK(c.dim() + d.dim() == n);
            CHECK(dual_code(d) == c);
            for (std::size_t i = 0; i < c.basis().rows(); ++i)
                for (std::size_t j = 0; j < d.basis().rows(); ++j) {
                    FieldElem dot = f.zero();
                    for (std::size_t t = 0; t < n; ++t)
                        dot += c.basis().at(i, t) * d.basis().at(j, t);
                    CHECK(dot.is_zero());
                }
        }
    }
}

TEST_CASE("eval_code dimension equals the monomial count") {
    Field f = Field::prime(3);
    CartesianGrid g = CartesianGrid::full(f, 2);
    LinearCode c = eval_code(g, {M("1"), M("X1"), M("X2"), M("X1*X2")});
    CHECK(c.dim() == 4);
    CHECK(c.length() == 9);
    LinearCode whole = eval_code(g, g.box().members());
    CHECK(whole.dim() == 9);  // the box evaluations span everything
    CHECK_THROWS_AS(eval_code(g, {M("X1"), M("X1")}), Error);
    CHECK_THROWS_WITH_AS(eval_code(g, {M("X1^3")}), doctest::Contains("MonomialOutsideBox"),
                         Error);
}

TEST_CASE("monomial_dual on the 2x2 box") {
    BoxRegion box({2, 2});
    std::vector<Monomial> d1 = monomial_dual(box, {M("1")});
    CHECK(d1.size() == 3);
    CHECK(std::find(d1.begin(), d1.end(), M("X1*X2")) == d1.end());
    std::vector<Monomial> d2 = monomial_dual(box, {M("1"), M("X1")});
    // Reflections of {1, X1} are {X1X2, X2}; the rest is {1, X1}.
    CHECK(d2.size() == 2);
    CHECK(std::find(d2.begin(), d2.end(), M("1")) != d2.end());
    CHECK(std::find(d2.begin(), d2.end(), M("X1")) != d2.end());
    CHECK_THROWS_WITH_AS(monomial_dual(box, {M("X1")}),
                         doctest::Contains("NotDivisorClosed"), Error);
    CHECK(monomial_dual(box, {}).size() == 4);
}

TEST_CASE("evaluation code duality for every divisor-closed set") {
    for (std::uint64_t q : {2, 3}) {
        Field f = Field::prime(q);
        CartesianGrid g = CartesianGrid::full(f, 2);
        for (const std::vector<Monomial>& w : divisor_closed_subsets(g.box())) {
            std::vector<Monomial> wd = monomial_dual(g.box(), w);
            LinearCode lhs = dual_code(eval_code(g, w));
            LinearCode rhs = eval_code(g, wd);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("index set helpers") {
    CHECK(complement_indices(5, {0, 2}) == IndexSet{1, 3, 4});
    CHECK(complement_indices(3, {}) == IndexSet{0, 1, 2});
    CHECK(complement_indices(3, {0, 1, 2}).empty());
}

TEST_CASE("supported subcode and projection on a known example") {
    Field f = Field::prime(2);
    LinearCode c(f, 3, {word(f, {1, 1, 0}), word(f, {0, 0, 1})});
    IndexSet a = {0, 1};
    LinearCode sup = supported_subcode(c, a);
    CHECK(sup.dim() == 1);               // (1,1,0)
    CHECK(sup.contains(word(f, {1, 1, 0})));
    LinearCode proj = projection(c, a);
    CHECK(proj.dim() == 1);              // zeroing position 3 collapses (0,0,1)
    CHECK(proj.length() == 3);
    CHECK(proj.contains(word(f, {1, 1, 0})));
    LinearCode empty_proj = projection(c, {});
    CHECK(empty_proj.dim() == 0);
    ForneyReport rep = forney_check(c, a);
    CHECK(rep.code_dim == 2);
    CHECK(rep.supported_in_complement == 1);
    CHECK(rep.projected == 1);
    CHECK(rep.dual_supported == 1);
    CHECK(rep.split_identity);
    CHECK(rep.duality_identity);
}

TEST_CASE("forney identities hold on random codes") {
    std::mt19937_64 rng(23);
    Field f = Field::prime(3);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 1 + rng() % 7;
        LinearCode c = random_code(f, rng, n);
        IndexSet a;
        for (std::size_t i = 0; i < n; ++i)
            if (rng() % 2) a.push_back(i);
        ForneyReport rep = forney_check(c, a);
        CHECK(rep.split_identity);
        CHECK(rep.duality_identity);
    }
}

TEST_CASE("rghw on the smallest interesting pair") {
    Field f = Field::prime(2);
    CartesianGrid g = CartesianGrid::full(f, 2);
    LinearCode c2 = eval_code(g, {M("1")});
    LinearCode c1 = eval_code(g, {M("1"), M("X1"), M("X2")});
    RghwResult r1 = rghw_bruteforce(c1, c2, 1);
    CHECK(r1.weight == 2);
    RghwResult r2 = rghw_bruteforce(c1, c2, 2);
    CHECK(r2.weight == 3);
    CHECK(r2.support.size() == 3);
    CHECK(r2.subspace_rows.size() == 2);
    // Every returned subspace row is in c1; span meets c2 trivially.
    for (const std::vector<FieldElem>& row : r2.subspace_rows) CHECK(c1.contains(row));
    CHECK(rghw_subspace_enum(c1, c2, 1) == 2);
    CHECK(rghw_subspace_enum(c1, c2, 2) == 3);
    CHECK_THROWS_WITH_AS(rghw_bruteforce(c1, c2, 3), doctest::Contains("KOutOfRange"), Error);
    CHECK_THROWS_AS(rghw_bruteforce(c1, c2, 0), Error);
}

TEST_CASE("rghw branch and bound matches literal subspace enumeration") {
    std::mt19937_64 rng(41);
    for (const Field& f : {Field::prime(2), Field::prime(3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t n = 2 + rng() % 4;  // lengths 2..5
            LinearCode c1 = random_code(f, rng, n);
            while (c1.dim() == 0) c1 = random_code(f, rng, n);
            // Random subcode: span of a subset of the basis rows.
            std::vector<std::vector<FieldElem>> sub;
            for (std::size_t i = 0; i + 1 < c1.dim(); ++i)
                if (rng() % 2) sub.push_back(c1.basis().row(i));
            LinearCode c2(f, n, sub);
            int kmax = static_cast<int>(c1.dim() - c2.dim());
            for (int k = 1; k <= kmax; ++k)
                CHECK(rghw_bruteforce(c1, c2, k).weight == rghw_subspace_enum(c1, c2, k));
        }
    }
}

TEST_CASE("generalized weights increase strictly in k") {
    Field f = Field::prime(2);
    CartesianGrid g = CartesianGrid::full(f, 3);
    LinearCode c1 = eval_code(g, {M("1", 3), M("X1", 3), M("X2", 3), M("X3", 3)});
    LinearCode zero(f, 8, {});
    long long prev = 0;
    for (int k = 1; k <= 4; ++k) {
        long long w = rghw_bruteforce(c1, zero, k).weight;
        CHECK(w > prev);
        prev = w;
    }
}

TEST_CASE("rghw search budget is enforced") {
    Field f = Field::prime(2);
    CartesianGrid g = CartesianGrid::full(f, 3);
    LinearCode c1 = eval_code(g, g.box().members());
    LinearCode zero(f, 8, {});
    CHECK_THROWS_WITH_AS(rghw_bruteforce(c1, zero, 4, 3),
                         doctest::Contains("SearchBudgetExceeded"), Error);
}

TEST_CASE("rghw_cartesian reproduces the worked example and validates input") {
    Field f = Field::extension_default(8);
    CartesianGrid g = CartesianGrid::full(f, 2);
    std::vector<Monomial> chain = {M("X1^3*X2"), M("X1^2*X2^2"), M("X1*X2^3")};
    CHECK(rghw_cartesian(g, chain, 1) == 35);
    CHECK(rghw_cartesian(g, chain, 2) == 41);
    CHECK(rghw_cartesian(g, chain, 3) == 46);
    CHECK_THROWS_AS(rghw_cartesian(g, chain, 4), Error);
    CHECK_THROWS_AS(rghw_cartesian(g, chain, 0), Error);
    CHECK_THROWS_AS(rghw_cartesian(g, {M("X1"), M("X1")}, 1), Error);
    CHECK_THROWS_AS(rghw_cartesian(g, {M("X1^8")}, 1), Error);
}

TEST_CASE("rghw_cartesian equals the code-pair weight on a consecutive chain") {
    Field f = Field::prime(3);
    CartesianGrid g = CartesianGrid::full(f, 2);
    MonomialOrder dl = MonomialOrder::parse("deglex:X1<X2");
    std::vector<Monomial> sorted = g.box().sorted_members(dl);
    // Chain X1^2, X1*X2, X2^2 (positions 3..5 in deglex order).
    std::vector<Monomial> chain(sorted.begin() + 3, sorted.begin() + 6);
    std::vector<Monomial> below(sorted.begin(), sorted.begin() + 3);
    std::vector<Monomial> upto(sorted.begin(), sorted.begin() + 6);
    LinearCode c2 = eval_code(g, below);
    LinearCode c1 = eval_code(g, upto);
    for (int k = 1; k <= 3; ++k)
        CHECK(rghw_cartesian(g, chain, k) == rghw_bruteforce(c1, c2, k).weight);
}
