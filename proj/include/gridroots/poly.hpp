#ifndef GRIDROOTS_POLY_HPP
#define GRIDROOTS_POLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gridroots/field.hpp"
#include "gridroots/monomial.hpp"

namespace gridroots {

// Product set S_1 x ... x S_m of duplicate-free coordinate sets.
class CartesianGrid {
  public:
    CartesianGrid(const Field& f, std::vector<std::vector<FieldElem>> sets);
    // All of F^m for a finite field F.
    static CartesianGrid full(const Field& f, int m);
    // The first caps[i] field elements in enumeration order per coordinate.
    static CartesianGrid prefix(const Field& f, const std::vector<int>& caps);

    const Field& field() const { return f_; }
    int dim() const { return static_cast<int>(sets_.size()); }
    const std::vector<FieldElem>& coordinate_set(int i) const {
        return sets_[static_cast<std::size_t>(i)];
    }
    long long size() const;
    std::vector<int> sizes() const;
    // The monomial box with cap_i = #S_i.
    BoxRegion box() const;

    // Points in row-major order, last coordinate fastest; matches the
    // member order of box().
    std::vector<std::vector<FieldElem>> points() const;
    bool contains(const std::vector<FieldElem>& pt) const;

  private:
    Field f_;
    std::vector<std::vector<FieldElem>> sets_;
};

// Finite list of distinct points of F^m.
class PointSet {
  public:
    PointSet(const Field& f, int m, std::vector<std::vector<FieldElem>> pts);
    static PointSet empty(const Field& f, int m);

    const Field& field() const { return f_; }
    int dim() const { return m_; }
    std::size_t size() const { return pts_.size(); }
    const std::vector<FieldElem>& point(std::size_t i) const { return pts_[i]; }
    const std::vector<std::vector<FieldElem>>& points() const { return pts_; }

  private:
    Field f_;
    int m_;
    std::vector<std::vector<FieldElem>> pts_;
};

// Multivariate polynomial with exact coefficients; zero coefficients are
// never stored.
class Polynomial {
  public:
    Polynomial(const Field& f, int m);  // zero polynomial
    static Polynomial from_term(const Field& f, const Monomial& mon, const FieldElem& c);
    static Polynomial constant(const Field& f, int m, const FieldElem& c);

    const Field& field() const { return f_; }
    int dim() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, FieldElem>& terms() const { return terms_; }

    FieldElem coeff(const Monomial& mon) const;
    void set_coeff(const Monomial& mon, const FieldElem& c);
    long long total_degree() const;  // -1 for the zero polynomial
    int partial_degree(int var) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const FieldElem& c) const;
    Polynomial times_monomial(const Monomial& mon) const;

    bool operator==(const Polynomial& o) const;

    // Largest monomial with nonzero coefficient; ZeroPolynomial if none.
    Monomial leading_monomial(const MonomialOrder& order) const;
    FieldElem leading_coefficient(const MonomialOrder& order) const;
    Polynomial monic(const MonomialOrder& order) const;

    FieldElem evaluate(const std::vector<FieldElem>& point) const;
    // Values in grid point order; power tables per coordinate.
    std::vector<FieldElem> evaluate_on(const CartesianGrid& grid) const;

    std::string text() const;

  private:
    Field f_;
    int m_;
    std::map<Monomial, FieldElem> terms_;
};

// "X1^3*X2 + 2*X2^2 + 1" with coefficients in the field's element syntax;
// extension-field coefficients go in parentheses: "(x+1)*X1^2".
Polynomial parse_polynomial(const Field& f, int m, std::string_view text);

// Remainder of f under multivariate division by gens; no remainder term is
// divisible by any generator's leading monomial.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& gens,
                  const MonomialOrder& order);

// prod_{s in S_i} (X_i - s) for each coordinate; the vanishing ideal
// generators of the grid.
std::vector<Polynomial> grid_generators(const CartesianGrid& grid);

// Product of linear factors with leading monomial N whose root count in the
// grid meets the footprint bound with equality.
Polynomial witness_polynomial(const CartesianGrid& grid, const Monomial& n);

struct RootCount {
    long long roots = 0;
    long long non_roots = 0;
};

// Points of the grid where every / not every polynomial vanishes.
RootCount count_common_roots(const std::vector<Polynomial>& polys, const CartesianGrid& grid);

}  // namespace gridroots

#endif
