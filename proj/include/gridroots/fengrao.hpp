#ifndef GRIDROOTS_FENGRAO_HPP
#define GRIDROOTS_FENGRAO_HPP

#include <optional>
#include <vector>

#include "gridroots/codes.hpp"
#include "gridroots/matrix.hpp"

namespace gridroots {

// Pair of ordered bases B, B' of F^n driving the weight machinery: indices
// of codewords, componentwise products of basis words, and the profiles
// counted by the support bounds. Indices are 1-based throughout to match
// the written form of the bounds.
class OrderedBasisPair {
  public:
    // Rows of `basis` (and `basis_alt` when given) must span F^n.
    OrderedBasisPair(const Matrix& basis, const std::optional<Matrix>& basis_alt = std::nullopt);
    // B = B' = evaluations of the grid's box monomials sorted by the order.
    static OrderedBasisPair grid_evaluation(const CartesianGrid& grid, const MonomialOrder& order);

    const Field& field() const { return b_.field(); }
    std::size_t n() const { return b_.rows(); }
    const Matrix& basis() const { return b_; }
    const Matrix& basis_alt() const { return bp_; }

    // Coordinates x with sum x_i b_i = c.
    std::vector<FieldElem> coords(const std::vector<FieldElem>& c) const;
    // Largest i with nonzero i-th coordinate; 0 for the zero word.
    int rho_bar(const std::vector<FieldElem>& c) const;
    // Smallest i with <c, b_i> nonzero; ZeroVector for the zero word.
    int m_value(const std::vector<FieldElem>& c) const;

    // Index of the componentwise product b_i * b'_j.
    int rho_product(int i, int j) const;
    // One-way well-behaving: the product index at (i, j) strictly exceeds
    // every product index at (u, j) with u < i.
    bool one_way_well_behaving(int i, int j) const;

    // lambda(i) = product indices over the well-behaved (i, j); its size
    // lower-bounds the weight of words with index i.
    const std::vector<int>& lambda_set(int i) const;
    // v(l) = first components i of well-behaved pairs with product index l;
    // its size lower-bounds the weight of words with m-value l.
    const std::vector<int>& v_set(int l) const;

    // Union cardinalities driving the subspace bounds.
    long long sigma_bar(const std::vector<int>& indices) const;
    long long mu_bar(const std::vector<int>& m_values) const;

  private:
    void build_profiles() const;

    Matrix b_, bp_, binv_t_;
    mutable bool profiled_ = false;
    mutable std::vector<std::vector<int>> rho_prod_;  // [i-1][j-1]
    mutable std::vector<std::vector<int>> lambda_, v_;
};

struct SubspaceWeightBounds {
    std::vector<int> rho_set;  // indices of an echelonized basis of D
    std::vector<int> m_set;    // m-values of an echelonized basis of D
    long long sigma_bound = 0;
    long long mu_bound = 0;
};

// Both support-size bounds for one nonzero subspace, given as a code.
SubspaceWeightBounds weight_bounds(const OrderedBasisPair& pair, const LinearCode& d);

struct RelativeWeightBounds {
    long long sigma_min = 0;  // bound for codes spanned by rows 1..k1 vs 1..k2
    long long mu_min = 0;     // bound for the duals of those codes, roles swapped
};

// Minima of sigma_bar / mu_bar over k-subsets of {k2+1, ..., k1}.
RelativeWeightBounds rghw_lower_bounds(const OrderedBasisPair& pair, int k2, int k1, int k);

}  // namespace gridroots

#endif
