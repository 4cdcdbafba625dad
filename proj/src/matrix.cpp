#include "gridroots/matrix.hpp"

#include <algorithm>

namespace gridroots {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<FieldElem>>& rows,
                         std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail("LengthMismatch", "row length differs from column count");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<FieldElem> Matrix::row(std::size_t r) const {
    return std::vector<FieldElem>(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                  a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transposed() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::multiply(const Matrix& o) const {
    if (cols_ != o.rows_) fail("DimensionMismatch", "matrix product shape mismatch");
    Matrix out(f_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElem& x = at(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                out.at(r, c) += x * o.at(k, c);
        }
    return out;
}

std::vector<FieldElem> Matrix::apply(const std::vector<FieldElem>& v) const {
    if (v.size() != cols_) fail("LengthMismatch", "vector length differs from column count");
    std::vector<FieldElem> out(rows_, f_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_cols) const {
    Matrix w = *this;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t sel = lead;
        while (sel < rows_ && w.at(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(w.at(sel, c), w.at(lead, c));
        FieldElem inv = w.at(lead, col).inverse();
        for (std::size_t c = col; c < cols_; ++c) w.at(lead, c) = w.at(lead, c) * inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead || w.at(r, col).is_zero()) continue;
            FieldElem factor = w.at(r, col);
            for (std::size_t c = col; c < cols_; ++c)
                w.at(r, c) = w.at(r, c) - factor * w.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    Matrix out(f_, pivots.size(), cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = w.at(r, c);
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return out;
}

std::size_t Matrix::rank() const { return rref().rows(); }

Matrix Matrix::nullspace() const {
    std::vector<std::size_t> pivots;
    Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix out(f_, free_cols.size(), cols_);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        out.at(i, free_cols[i]) = f_.one();
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            out.at(i, pivots[pr]) = -r.at(pr, free_cols[i]);
    }
    return out;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) fail("DimensionMismatch", "only square matrices invert");
    Matrix aug(f_, rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = f_.one();
    }
    std::vector<std::size_t> pivots;
    Matrix red = aug.rref(&pivots);
    if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
    Matrix inv(f_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = red.at(r, cols_ + c);
    return inv;
}

Matrix Matrix::top_echelon(std::vector<std::size_t>* top_cols) const {
    // Reverse the column order, take the canonical echelon form there, and
    // map back: pivots become distinct highest nonzero columns.
    Matrix rev(f_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) rev.at(r, c) = at(r, cols_ - 1 - c);
    std::vector<std::size_t> pivots;
    Matrix red = rev.rref(&pivots);
    Matrix out(f_, red.rows(), cols_);
    for (std::size_t r = 0; r < red.rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = red.at(r, cols_ - 1 - c);
    if (top_cols) {
        top_cols->clear();
        for (std::size_t p : pivots) top_cols->push_back(cols_ - 1 - p);
    }
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(f_ == o.f_)) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

void for_each_rref(const Field& f, std::size_t k, std::size_t n,
                   const std::function<bool(const Matrix&)>& fn) {
    if (!f.is_finite()) fail("InfiniteField", "subspace walk needs a finite field");
    if (k > n) return;
    if (k == 0) {
        fn(Matrix(f, 0, n));
        return;
    }
    std::vector<FieldElem> elems = f.enumerate();
    std::vector<std::size_t> pivots(k);
    // Free entries live at (r, c) with c > pivots[r] and c not a pivot.
    auto walk_free = [&](auto&& self, Matrix& m,
                         std::vector<std::pair<std::size_t, std::size_t>>& slots,
                         std::size_t idx) -> bool {
        if (idx == slots.size()) return fn(m);
        for (const FieldElem& v : elems) {
            m.at(slots[idx].first, slots[idx].second) = v;
            if (!self(self, m, slots, idx + 1)) return false;
        }
        return true;
    };
    auto walk_pivots = [&](auto&& self, std::size_t r, std::size_t from) -> bool {
        if (r == k) {
            Matrix m(f, k, n);
            std::vector<bool> is_pivot(n, false);
            for (std::size_t i = 0; i < k; ++i) {
                m.at(i, pivots[i]) = f.one();
                is_pivot[pivots[i]] = true;
            }
            std::vector<std::pair<std::size_t, std::size_t>> slots;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = pivots[i] + 1; c < n; ++c)
                    if (!is_pivot[c]) slots.emplace_back(i, c);
            return walk_free(walk_free, m, slots, 0);
        }
        for (std::size_t c = from; c + (k - 1 - r) < n; ++c) {
            pivots[r] = c;
            if (!self(self, r + 1, c + 1)) return false;
        }
        return true;
    };
    walk_pivots(walk_pivots, 0, 0);
}

}  // namespace gridroots
