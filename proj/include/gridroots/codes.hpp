#ifndef GRIDROOTS_CODES_HPP
#define GRIDROOTS_CODES_HPP

#include <cstddef>
#include <vector>

#include "gridroots/matrix.hpp"
#include "gridroots/poly.hpp"

namespace gridroots {

// Linear code over a finite field, held as the canonical echelon basis of
// the row space of the given spanning vectors. The zero code is allowed.
class LinearCode {
  public:
    LinearCode(const Field& f, std::size_t n, const std::vector<std::vector<FieldElem>>& rows);

    const Field& field() const { return f_; }
    std::size_t length() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<FieldElem>& v) const;
    bool subcode_of(const LinearCode& other) const;
    bool operator==(const LinearCode& o) const;  // equality as subspaces

  private:
    Field f_;
    std::size_t n_;
    Matrix basis_;
};

// Code spanned by the evaluations of the given distinct monomials at the
// grid points (in grid point order). The words are independent, so the
// dimension equals the number of monomials.
LinearCode eval_code(const CartesianGrid& grid, const std::vector<Monomial>& w);

// Dual under the standard inner product.
LinearCode dual_code(const LinearCode& c);

// Box members that are not reflections (cap-1-e per coordinate) of members
// of w. For divisor-closed w on a full grid this indexes the dual of the
// evaluation code.
std::vector<Monomial> monomial_dual(const BoxRegion& box, const std::vector<Monomial>& w);

// Positions are 0-based here; the JSON layer shifts to 1-based.
using IndexSet = std::vector<std::size_t>;

IndexSet complement_indices(std::size_t n, const IndexSet& a);

// Codewords vanishing outside A, as a code of full length n.
LinearCode supported_subcode(const LinearCode& c, const IndexSet& a);
// Codewords with the coordinates outside A zeroed out (length stays n).
LinearCode projection(const LinearCode& c, const IndexSet& a);

struct ForneyReport {
    std::size_t code_dim = 0;
    std::size_t supported_in_complement = 0;  // dim of C restricted-support outside A
    std::size_t projected = 0;                // dim of P_A(C)
    std::size_t dual_supported = 0;           // dim of (C dual) supported in A
    bool split_identity = false;              // code_dim == supported_in_complement + projected
    bool duality_identity = false;            // #A == projected + dual_supported
};

// Both dimension identities for one code and one position set; they hold
// for every input, so a false flag is reported rather than thrown.
ForneyReport forney_check(const LinearCode& c, const IndexSet& a);

struct RghwResult {
    long long weight = 0;        // minimal support size
    IndexSet support;            // one optimal support
    std::vector<std::vector<FieldElem>> subspace_rows;  // basis of one optimal subspace
};

// k-th relative generalized Hamming weight of c1 w.r.t. a proper subcode
// c2: the least support size of a k-dimensional subspace of c1 meeting c2
// only in zero. Exact branch-and-bound over position sets.
RghwResult rghw_bruteforce(const LinearCode& c1, const LinearCode& c2, int k,
                           long long budget = 10000000);

// Same value by literal enumeration of k-dimensional subspaces; only
// viable for tiny parameters, used as a cross-check.
long long rghw_subspace_enum(const LinearCode& c1, const LinearCode& c2, int k,
                             long long budget = 10000000);

// Combinatorial route for evaluation codes on a grid: the minimum of
// sigma(box, subset) over the k-subsets of the chain monomials. Agrees
// with rghw_bruteforce on the code pair spanned below/at the chain.
long long rghw_cartesian(const CartesianGrid& grid, const std::vector<Monomial>& chain, int k);

}  // namespace gridroots

#endif
