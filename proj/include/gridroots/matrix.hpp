#ifndef GRIDROOTS_MATRIX_HPP
#define GRIDROOTS_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gridroots/field.hpp"

namespace gridroots {

// Dense row-major matrix over one Field. All elimination is exact; over the
// rationals entries stay normalized automatically.
class Matrix {
  public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);  // zeros
    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<FieldElem>>& rows,
                            std::size_t cols);

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const FieldElem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<FieldElem> row(std::size_t r) const;
    Matrix transposed() const;
    Matrix multiply(const Matrix& o) const;
    std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;  // A v

    // Reduced row echelon form, pivots scanning columns left to right.
    // Zero rows are dropped; the result is the canonical basis of the row
    // space.
    Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
    std::size_t rank() const;
    // Canonical basis of {x : A x = 0}, one solution per row.
    Matrix nullspace() const;
    std::optional<Matrix> inverse() const;  // nullopt when singular

    // Row space basis in which every row has a distinct highest nonzero
    // column, rows sorted by that column descending; canonical.
    Matrix top_echelon(std::vector<std::size_t>* top_cols = nullptr) const;

    bool operator==(const Matrix& o) const;

  private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<FieldElem> a_;
};

// Invokes fn for every reduced-row-echelon k x n matrix of rank k, i.e. for
// a canonical representative of every k-dimensional subspace of F^n.
// Finite fields only; fn returning false stops the walk early.
void for_each_rref(const Field& f, std::size_t k, std::size_t n,
                   const std::function<bool(const Matrix&)>& fn);

}  // namespace gridroots

#endif
