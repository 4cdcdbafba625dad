#ifndef GRIDROOTS_BOUNDS_HPP
#define GRIDROOTS_BOUNDS_HPP

#include <optional>
#include <vector>

#include "gridroots/monomial.hpp"
#include "gridroots/poly.hpp"

namespace gridroots {

enum class BoundVerdict { BoundHolds, BoundTight, Violation };

// Direction of the inequality the bound asserts about the oracle count.
enum class BoundKind { RootsAtMost, NonRootsAtLeast };

// A one-sided bound, the monomials that produced it, and an optional
// exhaustive count. A Violation verdict means a defect somewhere, never a
// property of the input.
struct BoundReport {
    BoundKind kind = BoundKind::RootsAtMost;
    long long bound = 0;
    std::vector<Monomial> certificate;
    std::optional<long long> exhaustive;

    BoundVerdict verdict() const {
        if (!exhaustive) return BoundVerdict::BoundHolds;
        if (*exhaustive == bound) return BoundVerdict::BoundTight;
        bool ok = kind == BoundKind::RootsAtMost ? *exhaustive < bound : *exhaustive > bound;
        return ok ? BoundVerdict::BoundHolds : BoundVerdict::Violation;
    }
};

// Footprint bound: polynomials whose leading monomials include the given
// distinct box members have at most #grid - sigma(box, lms) common roots in
// the grid. The certificate is the monomial list itself.
BoundReport footprint_bound(const CartesianGrid& grid, const std::vector<Monomial>& lms);

// Same bound with the count filled in by evaluating the polynomials.
BoundReport footprint_checked(const CartesianGrid& grid, const std::vector<Polynomial>& polys,
                              const MonomialOrder& order);

// Generalized Alon-Furedi: minimum of sigma over monomials of total degree
// exactly `total` with per-variable degree at most partial[i]. The bound
// counts guaranteed non-roots; the certificate holds the argmin monomial.
BoundReport gen_alon_furedi(const std::vector<int>& grid_sizes, const std::vector<int>& partial,
                            long long total);

// Equal grid sizes a, m variables, degree d = v(a-1)+l with 0 <= l < a-1:
// the closed form (a-l) a^(m-v-1) for the minimum number of non-roots.
long long alon_furedi_special(int a, int m, long long d);

struct OrderingRow {
    MonomialOrder order;
    Monomial lm;
    long long bound = 0;  // footprint root bound for this order
};

struct OrderingComparison {
    std::vector<OrderingRow> rows;
    long long best_footprint = 0;     // smallest footprint root bound
    long long alon_furedi_bound = 0;  // root bound from the degree data
    Monomial alon_furedi_minimizer;
    long long exhaustive_roots = 0;
};

// Footprint bound of one polynomial under many orders, next to the
// Alon-Furedi bound and the true root count. The polynomial is reduced by
// the grid generators first. Default orders: lex, deglex and degrevlex for
// every variable permutation (dimension at most 4).
OrderingComparison compare_orderings(const Polynomial& f, const CartesianGrid& grid,
                                     const std::vector<MonomialOrder>& orders = {});

}  // namespace gridroots

#endif
