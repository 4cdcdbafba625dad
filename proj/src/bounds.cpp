#include "gridroots/bounds.hpp"

#include <algorithm>
#include <set>

namespace gridroots {

BoundReport footprint_bound(const CartesianGrid& grid, const std::vector<Monomial>& lms) {
    if (lms.empty()) fail("EmptyInput", "footprint bound needs leading monomials");
    BoxRegion box = grid.box();
    std::set<Monomial> seen;
    for (const Monomial& mon : lms) {
        if (!box.contains(mon)) fail("MonomialOutsideBox", mon.text() + " is outside the grid box");
        if (!seen.insert(mon).second)
            fail("DuplicateLeadingMonomial", mon.text() + " appears twice");
    }
    BoundReport rep;
    rep.kind = BoundKind::RootsAtMost;
    rep.bound = grid.size() - sigma(box, lms);
    rep.certificate = lms;
    return rep;
}

BoundReport footprint_checked(const CartesianGrid& grid, const std::vector<Polynomial>& polys,
                              const MonomialOrder& order) {
    if (polys.empty()) fail("EmptyInput", "no polynomials given");
    std::vector<Polynomial> reduced;
    std::vector<Polynomial> gens = grid_generators(grid);
    std::vector<Monomial> lms;
    for (const Polynomial& p : polys) {
        Polynomial r = reduce(p, gens, order);
        if (r.is_zero())
            fail("ZeroPolynomial", "a polynomial reduces to zero modulo the grid ideal");
        lms.push_back(r.leading_monomial(order));
        reduced.push_back(std::move(r));
    }
    std::set<Monomial> distinct(lms.begin(), lms.end());
    if (distinct.size() != lms.size())
        fail("DuplicateLeadingMonomial", "two polynomials share a leading monomial");
    BoundReport rep = footprint_bound(grid, lms);
    rep.exhaustive = count_common_roots(reduced, grid).roots;
    internal_check(rep.verdict() != BoundVerdict::Violation,
                   "footprint bound violated by an exhaustive count");
    return rep;
}

BoundReport gen_alon_furedi(const std::vector<int>& grid_sizes, const std::vector<int>& partial,
                            long long total) {
    if (grid_sizes.empty()) fail("DimensionMismatch", "no grid sizes given");
    if (partial.size() != grid_sizes.size())
        fail("DimensionMismatch", "degree list does not match the grid dimension");
    int m = static_cast<int>(grid_sizes.size());
    long long sum = 0;
    int maxd = 0;
    for (int i = 0; i < m; ++i) {
        int a = grid_sizes[static_cast<std::size_t>(i)];
        int d = partial[static_cast<std::size_t>(i)];
        if (a < 1) fail("ParseError", "grid sizes must be positive");
        if (d < 0 || d >= a)
            fail("InfeasibleDegrees", "each partial degree must satisfy 0 <= d_i < a_i");
        sum += d;
        maxd = std::max(maxd, d);
    }
    if (total < maxd || total > sum)
        fail("InfeasibleDegrees", "total degree must lie between max(d_i) and sum(d_i)");

    // Walk all exponent vectors with e_i <= partial[i] and sum = total.
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    std::optional<long long> best;
    std::vector<int> best_e;
    auto rec = [&](auto&& self, int var, long long left) -> void {
        if (var == m - 1) {
            if (left > partial[static_cast<std::size_t>(var)]) return;
            e[static_cast<std::size_t>(var)] = static_cast<int>(left);
            long long s = 1;
            for (int i = 0; i < m; ++i)
                s *= grid_sizes[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(i)];
            // sigma of a single monomial in the box is the count of its
            // multiples.
            if (!best || s < *best) {
                best = s;
                best_e = e;
            }
            return;
        }
        long long tail = 0;
        for (int i = var + 1; i < m; ++i) tail += partial[static_cast<std::size_t>(i)];
        for (int k = 0; k <= partial[static_cast<std::size_t>(var)] && k <= left; ++k) {
            if (left - k > tail) continue;
            e[static_cast<std::size_t>(var)] = k;
            self(self, var + 1, left - k);
        }
    };
    rec(rec, 0, total);
    internal_check(best.has_value(), "no monomial matches a feasible degree pattern");
    BoundReport rep;
    rep.kind = BoundKind::NonRootsAtLeast;
    rep.bound = *best;
    rep.certificate = {Monomial(best_e)};
    return rep;
}

long long alon_furedi_special(int a, int m, long long d) {
    if (a < 1) fail("ParseError", "grid size must be positive");
    if (m < 1) fail("DimensionMismatch", "need at least one variable");
    if (d < 1 || d > static_cast<long long>(m) * (a - 1))
        fail("DegreeOutOfRange", "degree must lie between 1 and m(a-1)");
    long long v = d / (a - 1);
    long long l = d - v * (a - 1);
    if (v == m) return 1;  // d = m(a-1): only the apex survives
    long long out = a - l;
    for (long long i = 0; i < m - v - 1; ++i) out *= a;
    return out;
}

OrderingComparison compare_orderings(const Polynomial& f, const CartesianGrid& grid,
                                     const std::vector<MonomialOrder>& orders) {
    int m = grid.dim();
    if (f.dim() != m) fail("DimensionMismatch", "polynomial dimension differs from the grid");
    std::vector<MonomialOrder> use = orders;
    if (use.empty()) {
        if (m > 4) fail("SearchBudgetExceeded", "default order set needs dimension at most 4");
        std::vector<int> perm(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::sort(perm.begin(), perm.end());
        do {
            use.push_back(MonomialOrder(OrderKind::Lex, perm));
            use.push_back(MonomialOrder(OrderKind::DegLex, perm));
            use.push_back(MonomialOrder(OrderKind::DegRevLex, perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    for (const MonomialOrder& o : use)
        if (o.dim() != m) fail("DimensionMismatch", "order dimension differs from the grid");

    std::vector<Polynomial> gens = grid_generators(grid);
    // Every generator leads with X_i^{a_i} under every monomial order, so
    // one reduction serves all orders: the remainder is exactly the form
    // with support inside the box.
    Polynomial r = reduce(f, gens, use[0]);
    if (r.is_zero())
        fail("ZeroPolynomial", "the polynomial reduces to zero modulo the grid ideal");
    OrderingComparison cmp{{}, 0, 0, Monomial::unit(m), 0};
    BoxRegion box = grid.box();
    std::optional<long long> best;
    for (const MonomialOrder& o : use) {
        Monomial lm = r.leading_monomial(o);
        internal_check(box.contains(lm), "reduced leading monomial escapes the box");
        long long bound = grid.size() - sigma(box, {lm});
        cmp.rows.push_back(OrderingRow{o, lm, bound});
        if (!best || bound < *best) best = bound;
    }
    if (!best) fail("EmptyInput", "no orders to compare");
    cmp.best_footprint = *best;
    std::vector<int> partial;
    for (int i = 0; i < m; ++i) partial.push_back(r.partial_degree(i));
    BoundReport af = gen_alon_furedi(grid.sizes(), partial, r.total_degree());
    cmp.alon_furedi_bound = grid.size() - af.bound;
    cmp.alon_furedi_minimizer = af.certificate.front();

    cmp.exhaustive_roots = count_common_roots({r}, grid).roots;
    internal_check(cmp.exhaustive_roots <= cmp.best_footprint,
                   "footprint bound violated by an exhaustive count");
    internal_check(cmp.exhaustive_roots <= cmp.alon_furedi_bound,
                   "degree bound violated by an exhaustive count");
    return cmp;
}

}  // namespace gridroots
