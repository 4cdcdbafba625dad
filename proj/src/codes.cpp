#include "gridroots/codes.hpp"

#include <algorithm>
#include <set>

namespace gridroots {

LinearCode::LinearCode(const Field& f, std::size_t n,
                       const std::vector<std::vector<FieldElem>>& rows)
    : f_(f), n_(n), basis_(Matrix::from_rows(f, rows, n).rref()) {
    if (!f.is_finite()) fail("InfiniteField", "codes are defined over finite fields");
    if (n < 1) fail("EmptyInput", "code length must be positive");
}

bool LinearCode::contains(const std::vector<FieldElem>& v) const {
    if (v.size() != n_) fail("LengthMismatch", "word length differs from the code length");
    std::vector<std::vector<FieldElem>> rows;
    for (std::size_t r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
    rows.push_back(v);
    return Matrix::from_rows(f_, rows, n_).rank() == dim();
}

bool LinearCode::subcode_of(const LinearCode& other) const {
    if (n_ != other.n_ || f_ != other.f_) return false;
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        if (!other.contains(basis_.row(r))) return false;
    return true;
}

bool LinearCode::operator==(const LinearCode& o) const {
    return n_ == o.n_ && f_ == o.f_ && basis_ == o.basis_;
}

LinearCode eval_code(const CartesianGrid& grid, const std::vector<Monomial>& w) {
    BoxRegion box = grid.box();
    std::set<Monomial> seen;
    std::vector<std::vector<FieldElem>> rows;
    for (const Monomial& mon : w) {
        if (!box.contains(mon)) fail("MonomialOutsideBox", mon.text() + " is outside the grid box");
        if (!seen.insert(mon).second) fail("DuplicateMonomial", mon.text() + " appears twice");
        rows.push_back(Polynomial::from_term(grid.field(), mon, grid.field().one())
                           .evaluate_on(grid));
    }
    LinearCode c(grid.field(), static_cast<std::size_t>(grid.size()), rows);
    internal_check(c.dim() == w.size(), "monomial evaluations are not independent");
    return c;
}

LinearCode dual_code(const LinearCode& c) {
    std::vector<std::vector<FieldElem>> rows;
    if (c.dim() == 0) {
        Matrix id = Matrix::identity(c.field(), c.length());
        for (std::size_t r = 0; r < id.rows(); ++r) rows.push_back(id.row(r));
    } else {
        Matrix n = c.basis().nullspace();
        for (std::size_t r = 0; r < n.rows(); ++r) rows.push_back(n.row(r));
    }
    LinearCode d(c.field(), c.length(), rows);
    internal_check(d.dim() + c.dim() == c.length(), "dual dimension mismatch");
    return d;
}

std::vector<Monomial> monomial_dual(const BoxRegion& box, const std::vector<Monomial>& w) {
    std::set<Monomial> members(w.begin(), w.end());
    std::set<Monomial> reflected;
    for (const Monomial& mon : w) {
        if (!box.contains(mon)) fail("MonomialOutsideBox", mon.text() + " is outside the box");
        if (!reflected.insert(complement_in(box, mon)).second)
            fail("DuplicateMonomial", mon.text() + " appears twice");
        // Divisor-closedness: dropping one from any positive exponent must
        // stay inside the set.
        for (int i = 0; i < mon.dim(); ++i) {
            if (mon.exp(i) == 0) continue;
            std::vector<int> e = mon.exps();
            --e[static_cast<std::size_t>(i)];
            if (members.find(Monomial(std::move(e))) == members.end())
                fail("NotDivisorClosed", mon.text() + " has a divisor outside the set");
        }
    }
    std::vector<Monomial> out;
    for (const Monomial& member : box.members())
        if (reflected.find(member) == reflected.end()) out.push_back(member);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void validate_index_set(std::size_t n, const IndexSet& a) {
    std::set<std::size_t> seen;
    for (std::size_t i : a) {
        if (i >= n) fail("IndexOutOfRange", "position " + std::to_string(i + 1) +
                                                " exceeds the code length");
        if (!seen.insert(i).second)
            fail("DuplicateIndex", "position " + std::to_string(i + 1) + " appears twice");
    }
}

}  // namespace

IndexSet complement_indices(std::size_t n, const IndexSet& a) {
    validate_index_set(n, a);
    std::vector<bool> in(n, false);
    for (std::size_t i : a) in[i] = true;
    IndexSet out;
    for (std::size_t i = 0; i < n; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

LinearCode supported_subcode(const LinearCode& c, const IndexSet& a) {
    validate_index_set(c.length(), a);
    IndexSet outside = complement_indices(c.length(), a);
    std::size_t k = c.dim();
    if (k == 0) return c;
    // Coefficient vectors x with (x B)_j = 0 for every j outside A.
    Matrix constraints(c.field(), outside.size(), k);
    for (std::size_t r = 0; r < outside.size(); ++r)
        for (std::size_t i = 0; i < k; ++i) constraints.at(r, i) = c.basis().at(i, outside[r]);
    Matrix coef = constraints.nullspace();
    std::vector<std::vector<FieldElem>> rows;
    for (std::size_t r = 0; r < coef.rows(); ++r) {
        std::vector<FieldElem> word(c.length(), c.field().zero());
        for (std::size_t i = 0; i < k; ++i) {
            if (coef.at(r, i).is_zero()) continue;
            for (std::size_t j = 0; j < c.length(); ++j)
                word[j] += coef.at(r, i) * c.basis().at(i, j);
        }
        rows.push_back(std::move(word));
    }
    return LinearCode(c.field(), c.length(), rows);
}

LinearCode projection(const LinearCode& c, const IndexSet& a) {
    validate_index_set(c.length(), a);
    std::vector<bool> keep(c.length(), false);
    for (std::size_t j : a) keep[j] = true;
    std::vector<std::vector<FieldElem>> rows;
    for (std::size_t r = 0; r < c.dim(); ++r) {
        std::vector<FieldElem> word = c.basis().row(r);
        for (std::size_t j = 0; j < c.length(); ++j)
            if (!keep[j]) word[j] = c.field().zero();
        rows.push_back(std::move(word));
    }
    return LinearCode(c.field(), c.length(), rows);
}

ForneyReport forney_check(const LinearCode& c, const IndexSet& a) {
    validate_index_set(c.length(), a);
    ForneyReport rep;
    rep.code_dim = c.dim();
    IndexSet outside = complement_indices(c.length(), a);
    rep.supported_in_complement = supported_subcode(c, outside).dim();
    rep.projected = projection(c, a).dim();
    rep.dual_supported = supported_subcode(dual_code(c), a).dim();
    rep.split_identity = rep.code_dim == rep.supported_in_complement + rep.projected;
    rep.duality_identity = a.size() == rep.projected + rep.dual_supported;
    return rep;
}

namespace {

// Incremental column-rank tracker: append columns, pop on backtrack.
class RankTracker {
  public:
    explicit RankTracker(const Matrix& basis) : basis_(&basis) {}

    std::size_t rank() const { return pivots_.size(); }

    // Returns true if the column was independent (rank grew).
    bool push_column(std::size_t col) {
        std::size_t k = basis_->rows();
        std::vector<FieldElem> v(k, basis_->field().zero());
        for (std::size_t i = 0; i < k; ++i) v[i] = basis_->at(i, col);
        for (const auto& [pos, vec] : pivots_) {
            if (v[pos].is_zero()) continue;
            FieldElem factor = v[pos];
            for (std::size_t i = 0; i < k; ++i) v[i] -= factor * vec[i];
        }
        std::size_t pos = 0;
        while (pos < k && v[pos].is_zero()) ++pos;
        grew_.push_back(pos < k);
        if (pos < k) {
            FieldElem inv = v[pos].inverse();
            for (std::size_t i = 0; i < k; ++i) v[i] = v[i] * inv;
            pivots_.emplace_back(pos, std::move(v));
        }
        return grew_.back();
    }

    void pop_column() {
        if (grew_.back()) pivots_.pop_back();
        grew_.pop_back();
    }

  private:
    const Matrix* basis_;
    std::vector<std::pair<std::size_t, std::vector<FieldElem>>> pivots_;
    std::vector<bool> grew_;
};

struct RghwSearch {
    const Matrix* b1;
    const Matrix* b2;
    std::size_t n;
    long long slack;  // r1 - r2 may not exceed this
    long long budget;
    long long nodes = 0;
    std::size_t best_size = 0;  // largest |S| with difference within slack
    bool found = false;
    std::vector<bool> chosen, best_chosen;
    RankTracker t1, t2;

    RghwSearch(const Matrix& m1, const Matrix& m2, long long slack_, long long budget_)
        : b1(&m1), b2(&m2), n(m1.cols()), slack(slack_), budget(budget_),
          chosen(n, false), best_chosen(n, false), t1(m1), t2(m2) {}

    long long diff() const {
        return static_cast<long long>(t1.rank()) - static_cast<long long>(t2.rank());
    }

    void record(std::size_t size) {
        if (!found || size > best_size) {
            found = true;
            best_size = size;
            best_chosen = chosen;
        }
    }

    // Nesting of the codes makes diff() monotone under adding columns, so a
    // node that already exceeds the slack has no viable descendants.
    void run(std::size_t col, std::size_t size) {
        if (++nodes > budget) fail("SearchBudgetExceeded", "support search budget exhausted");
        if (diff() > slack) return;
        if (col == n) {
            record(size);
            return;
        }
        if (found && size + (n - col) <= best_size) return;  // cannot improve
        // Closure shortcut: if every remaining column fits, take them all.
        {
            std::size_t added = 0;
            bool ok = true;
            for (std::size_t c = col; c < n; ++c) {
                t1.push_column(c);
                t2.push_column(c);
                ++added;
                if (diff() > slack) {
                    ok = false;
                    break;
                }
            }
            for (std::size_t i = 0; i < added; ++i) {
                t1.pop_column();
                t2.pop_column();
            }
            if (ok) {
                for (std::size_t c = col; c < n; ++c) chosen[c] = true;
                record(size + (n - col));
                for (std::size_t c = col; c < n; ++c) chosen[c] = false;
                return;
            }
        }
        t1.push_column(col);
        t2.push_column(col);
        chosen[col] = true;
        run(col + 1, size + 1);
        chosen[col] = false;
        t1.pop_column();
        t2.pop_column();
        run(col + 1, size);
    }
};

void check_rghw_inputs(const LinearCode& c1, const LinearCode& c2, int k) {
    if (c1.length() != c2.length() || c1.field() != c2.field())
        fail("LengthMismatch", "the two codes live in different spaces");
    if (!c2.subcode_of(c1)) fail("NotNested", "the second code is not contained in the first");
    long long t = static_cast<long long>(c1.dim()) - static_cast<long long>(c2.dim());
    if (t <= 0) fail("NotNested", "the containment must be proper");
    if (k < 1 || k > t)
        fail("KOutOfRange", "k must lie between 1 and the dimension difference " +
                                std::to_string(t));
}

}  // namespace

RghwResult rghw_bruteforce(const LinearCode& c1, const LinearCode& c2, int k, long long budget) {
    check_rghw_inputs(c1, c2, k);
    long long t = static_cast<long long>(c1.dim()) - static_cast<long long>(c2.dim());
    // Minimal #A with dim (C1)_A - dim (C2)_A >= k, phrased as the largest
    // complement S with rank_1(S) - rank_2(S) <= t - k.
    const Matrix& b2 = c2.basis();
    RghwSearch search(c1.basis(), b2, t - k, budget);
    search.run(0, 0);
    internal_check(search.found, "support search found no feasible set");
    RghwResult res;
    res.weight = static_cast<long long>(c1.length() - search.best_size);
    for (std::size_t i = 0; i < c1.length(); ++i)
        if (!search.best_chosen[i]) res.support.push_back(i);

    // Build one k-dimensional witness inside the support: rows of (C1)_A
    // independent modulo C2.
    LinearCode inside = supported_subcode(c1, res.support);
    std::vector<std::vector<FieldElem>> stack;
    for (std::size_t r = 0; r < b2.rows(); ++r) stack.push_back(b2.row(r));
    std::size_t base_rank = Matrix::from_rows(c1.field(), stack, c1.length()).rank();
    for (std::size_t r = 0; r < inside.dim() && res.subspace_rows.size() < static_cast<std::size_t>(k);
         ++r) {
        stack.push_back(inside.basis().row(r));
        std::size_t nr = Matrix::from_rows(c1.field(), stack, c1.length()).rank();
        if (nr > base_rank) {
            base_rank = nr;
            res.subspace_rows.push_back(inside.basis().row(r));
        } else {
            stack.pop_back();
        }
    }
    internal_check(res.subspace_rows.size() == static_cast<std::size_t>(k),
                   "witness subspace has the wrong dimension");
    // At the optimum the witness support fills A exactly.
    std::vector<bool> used(c1.length(), false);
    for (const auto& row : res.subspace_rows)
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) used[j] = true;
    IndexSet actual;
    for (std::size_t j = 0; j < c1.length(); ++j)
        if (used[j]) actual.push_back(j);
    internal_check(actual == res.support, "witness support does not fill the optimal set");
    return res;
}

long long rghw_subspace_enum(const LinearCode& c1, const LinearCode& c2, int k, long long budget) {
    check_rghw_inputs(c1, c2, k);
    const Field& f = c1.field();
    std::size_t k1 = c1.dim(), k2 = c2.dim(), n = c1.length();
    // Number of candidate subspaces: the Gaussian binomial [k1 choose k]_q.
    {
        Rational count = 1;
        Rational q(f.order());
        auto qpow = [&](std::size_t e) {
            Rational r = 1;
            for (std::size_t i = 0; i < e; ++i) r *= q;
            return r;
        };
        for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i)
            count *= (qpow(k1 - i) - 1) / (qpow(static_cast<std::size_t>(k) - i) - 1);
        if (count > Rational(budget))
            fail("SearchBudgetExceeded", "too many subspaces to enumerate");
    }
    long long best = -1;
    for_each_rref(f, static_cast<std::size_t>(k), k1, [&](const Matrix& coef) {
        std::vector<std::vector<FieldElem>> rows;
        for (std::size_t r = 0; r < coef.rows(); ++r) {
            std::vector<FieldElem> word(n, f.zero());
            for (std::size_t i = 0; i < k1; ++i) {
                if (coef.at(r, i).is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j)
                    word[j] += coef.at(r, i) * c1.basis().at(i, j);
            }
            rows.push_back(std::move(word));
        }
        std::vector<std::vector<FieldElem>> stacked = rows;
        for (std::size_t r = 0; r < k2; ++r) stacked.push_back(c2.basis().row(r));
        if (Matrix::from_rows(f, stacked, n).rank() != static_cast<std::size_t>(k) + k2)
            return true;  // meets the subcode, skip
        std::vector<bool> used(n, false);
        for (const auto& row : rows)
            for (std::size_t j = 0; j < n; ++j)
                if (!row[j].is_zero()) used[j] = true;
        long long w = static_cast<long long>(std::count(used.begin(), used.end(), true));
        if (best < 0 || w < best) best = w;
        return true;
    });
    internal_check(best >= 0, "no admissible subspace found");
    return best;
}

long long rghw_cartesian(const CartesianGrid& grid, const std::vector<Monomial>& chain, int k) {
    int t = static_cast<int>(chain.size());
    if (t == 0) fail("EmptyInput", "empty monomial chain");
    BoxRegion box = grid.box();
    std::set<Monomial> seen;
    for (const Monomial& mon : chain) {
        if (!box.contains(mon)) fail("MonomialOutsideBox", mon.text() + " is outside the box");
        if (!seen.insert(mon).second) fail("DuplicateMonomial", mon.text() + " appears twice");
    }
    if (k < 1 || k > t) fail("KOutOfRange", "k must lie between 1 and the chain length");
    long long best = -1;
    std::vector<Monomial> pick;
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth == k) {
            long long s = sigma(box, pick);
            if (best < 0 || s < best) best = s;
            return;
        }
        for (int i = from; i < t; ++i) {
            pick.push_back(chain[static_cast<std::size_t>(i)]);
            self(self, i + 1, depth + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace gridroots
