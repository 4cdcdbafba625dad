#ifndef GRIDROOTS_INTERP_HPP
#define GRIDROOTS_INTERP_HPP

#include <vector>

#include "gridroots/codes.hpp"
#include "gridroots/poly.hpp"

namespace gridroots {

// A consecutive monomial chain under one order together with the points
// the sought polynomials must vanish on. Consecutiveness is relative to
// the full-field box for finite fields and unrestricted otherwise.
class InterpolationTask {
  public:
    InterpolationTask(const Field& f, const MonomialOrder& order, std::vector<Monomial> chain,
                      PointSet points);

    const Field& field() const { return f_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Monomial>& chain() const { return chain_; }
    const PointSet& points() const { return points_; }
    int dim() const { return order_.dim(); }
    int t() const { return static_cast<int>(chain_.size()); }

  private:
    Field f_;
    MonomialOrder order_;
    std::vector<Monomial> chain_;
    PointSet points_;
};

struct GuaranteeReport {
    long long threshold = 0;  // min mu over the (t-k+1)-subsets of the chain
    bool satisfied = false;   // #A < threshold
};

// Existence guarantee: #A below the threshold promises k polynomials with
// distinct chain leading monomials vanishing on A.
GuaranteeReport guarantee_check(const InterpolationTask& task, int k);

// Raised when fewer than k chain leading monomials are attainable; carries
// how many are.
class ShortfallError : public Error {
  public:
    ShortfallError(long long achieved, long long requested);
    long long achieved() const { return achieved_; }

  private:
    long long achieved_ = 0;
};

// k polynomials vanishing on the task points with pairwise distinct
// leading monomials from the chain, smallest first. Nullspace of the
// evaluation matrix, echelonized so leading monomials are distinct, then
// cofactor-lifted into the chain where needed. Vanishing and the
// leading-monomial contract are asserted on every return path.
std::vector<Polynomial> interpolate(const InterpolationTask& task, int k);

// Exact number of attainable distinct chain leading monomials, computed
// both as dim(C1)_Abar - dim(C2)_Abar and through the dual-code route;
// the two must agree. Finite fields only.
long long capacity(const InterpolationTask& task);

// A point set of minimal size on which fewer than k chain leading
// monomials are attainable: the support of a minimal (t-k+1)-dimensional
// subspace found by rghw_bruteforce on the dual code pair.
PointSet sharpness_witness(const Field& f, const MonomialOrder& order,
                           const std::vector<Monomial>& chain, int k);

// Nonzero polynomial of total degree at most d vanishing on A, provided
// #A is below the dimension of the degree-d function space. Runs the
// chain interpolation with the full degree-d slice under deglex.
Polynomial low_degree_vanishing(const Field& f, int m, long long d, const PointSet& a);

}  // namespace gridroots

#endif
