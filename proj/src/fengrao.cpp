#include "gridroots/fengrao.hpp"

#include <algorithm>
#include <set>

namespace gridroots {

namespace {

Matrix checked_square(const Matrix& m) {
    if (m.rows() != m.cols()) fail("DimensionMismatch", "basis matrix must be square");
    if (m.rows() == 0) fail("EmptyInput", "basis matrix must be nonempty");
    return m;
}

}  // namespace

OrderedBasisPair::OrderedBasisPair(const Matrix& basis, const std::optional<Matrix>& basis_alt)
    : b_(checked_square(basis)),
      bp_(basis_alt ? checked_square(*basis_alt) : b_),
      binv_t_(b_.field(), 0, 0) {  // placeholder shape, replaced below
    if (bp_.rows() != b_.rows() || bp_.field() != b_.field())
        fail("DimensionMismatch", "the two bases must match in size and field");
    std::optional<Matrix> inv = b_.transposed().inverse();
    if (!inv) fail("SingularBasis", "the rows do not form a basis");
    binv_t_ = *inv;
    if (bp_.rank() != bp_.rows()) fail("SingularBasis", "the second rows do not form a basis");
}

OrderedBasisPair OrderedBasisPair::grid_evaluation(const CartesianGrid& grid,
                                                   const MonomialOrder& order) {
    std::vector<Monomial> mons = grid.box().sorted_members(order);
    std::vector<std::vector<FieldElem>> rows;
    for (const Monomial& mon : mons)
        rows.push_back(
            Polynomial::from_term(grid.field(), mon, grid.field().one()).evaluate_on(grid));
    Matrix b = Matrix::from_rows(grid.field(), rows, static_cast<std::size_t>(grid.size()));
    return OrderedBasisPair(b);
}

std::vector<FieldElem> OrderedBasisPair::coords(const std::vector<FieldElem>& c) const {
    return binv_t_.apply(c);
}

int OrderedBasisPair::rho_bar(const std::vector<FieldElem>& c) const {
    std::vector<FieldElem> x = coords(c);
    for (std::size_t i = x.size(); i-- > 0;)
        if (!x[i].is_zero()) return static_cast<int>(i) + 1;
    return 0;
}

int OrderedBasisPair::m_value(const std::vector<FieldElem>& c) const {
    if (c.size() != n()) fail("LengthMismatch", "word length differs from the basis");
    for (std::size_t j = 0; j < n(); ++j) {
        FieldElem dot = field().zero();
        for (std::size_t t = 0; t < n(); ++t) dot += c[t] * b_.at(j, t);
        if (!dot.is_zero()) return static_cast<int>(j) + 1;
    }
    fail("ZeroVector", "the zero word has no m-value");
}

void OrderedBasisPair::build_profiles() const {
    if (profiled_) return;
    std::size_t nn = n();
    rho_prod_.assign(nn, std::vector<int>(nn, 0));
    std::vector<FieldElem> prod(nn, field().zero());
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j) {
            for (std::size_t t = 0; t < nn; ++t) prod[t] = b_.at(i, t) * bp_.at(j, t);
            rho_prod_[i][j] = rho_bar(prod);
        }
    lambda_.assign(nn + 1, {});
    v_.assign(nn + 1, {});
    // Prefix maxima down each column j decide well-behavedness in O(1).
    for (std::size_t j = 0; j < nn; ++j) {
        int running = 0;
        for (std::size_t i = 0; i < nn; ++i) {
            int r = rho_prod_[i][j];
            if (r > running) {
                lambda_[i + 1].push_back(r);
                v_[static_cast<std::size_t>(r)].push_back(static_cast<int>(i) + 1);
                running = r;
            }
        }
    }
    for (auto& s : lambda_) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    for (auto& s : v_) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    profiled_ = true;
}

int OrderedBasisPair::rho_product(int i, int j) const {
    if (i < 1 || j < 1 || i > static_cast<int>(n()) || j > static_cast<int>(n()))
        fail("IndexOutOfRange", "basis indices run from 1 to n");
    build_profiles();
    return rho_prod_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

bool OrderedBasisPair::one_way_well_behaving(int i, int j) const {
    int r = rho_product(i, j);
    if (r == 0) return false;
    for (int u = 1; u < i; ++u)
        if (rho_prod_[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(j - 1)] >= r)
            return false;
    return true;
}

const std::vector<int>& OrderedBasisPair::lambda_set(int i) const {
    if (i < 1 || i > static_cast<int>(n())) fail("IndexOutOfRange", "index runs from 1 to n");
    build_profiles();
    return lambda_[static_cast<std::size_t>(i)];
}

const std::vector<int>& OrderedBasisPair::v_set(int l) const {
    if (l < 1 || l > static_cast<int>(n())) fail("IndexOutOfRange", "index runs from 1 to n");
    build_profiles();
    return v_[static_cast<std::size_t>(l)];
}

long long OrderedBasisPair::sigma_bar(const std::vector<int>& indices) const {
    if (indices.empty()) fail("EmptyInput", "sigma_bar of no indices");
    // The union includes the argument indices themselves.
    std::set<int> u(indices.begin(), indices.end());
    for (int i : indices) {
        const std::vector<int>& s = lambda_set(i);
        u.insert(s.begin(), s.end());
    }
    return static_cast<long long>(u.size());
}

long long OrderedBasisPair::mu_bar(const std::vector<int>& m_values) const {
    if (m_values.empty()) fail("EmptyInput", "mu_bar of no indices");
    std::set<int> u(m_values.begin(), m_values.end());
    for (int l : m_values) {
        const std::vector<int>& s = v_set(l);
        u.insert(s.begin(), s.end());
    }
    return static_cast<long long>(u.size());
}

SubspaceWeightBounds weight_bounds(const OrderedBasisPair& pair, const LinearCode& d) {
    if (d.length() != pair.n()) fail("LengthMismatch", "code length differs from the basis");
    if (d.dim() == 0) fail("ZeroSubspace", "the zero subspace has no weight bound");
    std::size_t k = d.dim();

    // rho side: echelonize the coordinate vectors to get distinct top
    // indices.
    std::vector<std::vector<FieldElem>> coord_rows;
    for (std::size_t r = 0; r < k; ++r) coord_rows.push_back(pair.coords(d.basis().row(r)));
    std::vector<std::size_t> tops;
    Matrix::from_rows(pair.field(), coord_rows, pair.n()).top_echelon(&tops);
    internal_check(tops.size() == k, "coordinate echelon lost dimension");
    SubspaceWeightBounds out;
    for (std::size_t t : tops) out.rho_set.push_back(static_cast<int>(t) + 1);
    std::sort(out.rho_set.begin(), out.rho_set.end());

    // m side: transform by inner products against B, echelonize left.
    std::vector<std::vector<FieldElem>> gram_rows;
    for (std::size_t r = 0; r < k; ++r) {
        std::vector<FieldElem> row = d.basis().row(r);
        std::vector<FieldElem> g(pair.n(), pair.field().zero());
        for (std::size_t j = 0; j < pair.n(); ++j)
            for (std::size_t t = 0; t < pair.n(); ++t) g[j] += row[t] * pair.basis().at(j, t);
        gram_rows.push_back(std::move(g));
    }
    std::vector<std::size_t> pivots;
    Matrix::from_rows(pair.field(), gram_rows, pair.n()).rref(&pivots);
    internal_check(pivots.size() == k, "inner-product echelon lost dimension");
    for (std::size_t p : pivots) out.m_set.push_back(static_cast<int>(p) + 1);

    out.sigma_bound = pair.sigma_bar(out.rho_set);
    out.mu_bound = pair.mu_bar(out.m_set);
    return out;
}

RelativeWeightBounds rghw_lower_bounds(const OrderedBasisPair& pair, int k2, int k1, int k) {
    int nn = static_cast<int>(pair.n());
    if (k2 < 0 || k1 > nn || k2 >= k1) fail("KOutOfRange", "need 0 <= k2 < k1 <= n");
    if (k < 1 || k > k1 - k2) fail("KOutOfRange", "k must lie between 1 and k1 - k2");
    std::vector<int> pool;
    for (int i = k2 + 1; i <= k1; ++i) pool.push_back(i);
    // All k-subsets of the pool.
    std::vector<int> pick(static_cast<std::size_t>(k));
    RelativeWeightBounds out{-1, -1};
    long long combos = 1;
    for (int i = 0; i < k; ++i) {
        combos = combos * (static_cast<long long>(pool.size()) - i) / (i + 1);
        if (combos > 2000000) fail("SearchBudgetExceeded", "too many index subsets");
    }
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth == k) {
            long long s = pair.sigma_bar(pick);
            long long m = pair.mu_bar(pick);
            if (out.sigma_min < 0 || s < out.sigma_min) out.sigma_min = s;
            if (out.mu_min < 0 || m < out.mu_min) out.mu_min = m;
            return;
        }
        for (int i = from; i < static_cast<int>(pool.size()); ++i) {
            pick[static_cast<std::size_t>(depth)] = pool[static_cast<std::size_t>(i)];
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace gridroots
