#include "gridroots/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gridroots {

namespace {

constexpr long long kEnumerationBudget = 2000000;

std::string point_key(const std::vector<FieldElem>& pt) {
    std::string s;
    for (const FieldElem& e : pt) {
        s += e.render();
        s += "|";
    }
    return s;
}

}  // namespace

CartesianGrid::CartesianGrid(const Field& f, std::vector<std::vector<FieldElem>> sets)
    : f_(f), sets_(std::move(sets)) {
    if (sets_.empty()) fail("DimensionMismatch", "grid needs at least one coordinate");
    for (const auto& s : sets_) {
        if (s.empty()) fail("EmptyInput", "empty coordinate set");
        std::set<std::string> seen;
        for (const FieldElem& e : s) {
            if (e.field() != f_) fail("SpecMismatch", "coordinate from a different field");
            if (!seen.insert(e.render()).second)
                fail("DuplicatePoints", "coordinate set repeats " + e.render());
        }
    }
}

CartesianGrid CartesianGrid::full(const Field& f, int m) {
    if (!f.is_finite()) fail("InfiniteField", "full grid needs a finite field");
    if (m < 1) fail("DimensionMismatch", "grid needs at least one coordinate");
    std::vector<std::vector<FieldElem>> sets(static_cast<std::size_t>(m), f.enumerate());
    return CartesianGrid(f, std::move(sets));
}

CartesianGrid CartesianGrid::prefix(const Field& f, const std::vector<int>& caps) {
    if (!f.is_finite()) {
        // Rational prefix grid: coordinates 0, 1, 2, ...
        std::vector<std::vector<FieldElem>> sets;
        for (int c : caps) {
            if (c < 1) fail("ParseError", "grid sizes must be positive");
            std::vector<FieldElem> s;
            for (int i = 0; i < c; ++i) s.push_back(f.from_int(i));
            sets.push_back(std::move(s));
        }
        return CartesianGrid(f, std::move(sets));
    }
    std::vector<FieldElem> all = f.enumerate();
    std::vector<std::vector<FieldElem>> sets;
    for (int c : caps) {
        if (c < 1) fail("ParseError", "grid sizes must be positive");
        if (static_cast<std::uint64_t>(c) > f.order())
            fail("IndexOutOfRange", "grid size exceeds the field order");
        sets.emplace_back(all.begin(), all.begin() + c);
    }
    return CartesianGrid(f, std::move(sets));
}

long long CartesianGrid::size() const {
    long long n = 1;
    for (const auto& s : sets_) {
        if (n > 2000000000000000000LL / static_cast<long long>(s.size()))
            fail("SearchBudgetExceeded", "grid too large to count");
        n *= static_cast<long long>(s.size());
    }
    return n;
}

std::vector<int> CartesianGrid::sizes() const {
    std::vector<int> out;
    for (const auto& s : sets_) out.push_back(static_cast<int>(s.size()));
    return out;
}

BoxRegion CartesianGrid::box() const { return BoxRegion(sizes()); }

std::vector<std::vector<FieldElem>> CartesianGrid::points() const {
    long long n = size();
    if (n > kEnumerationBudget) fail("SearchBudgetExceeded", "grid too large to enumerate");
    std::vector<std::vector<FieldElem>> out;
    out.reserve(static_cast<std::size_t>(n));
    std::vector<std::size_t> idx(sets_.size(), 0);
    for (;;) {
        std::vector<FieldElem> pt;
        pt.reserve(sets_.size());
        for (std::size_t i = 0; i < sets_.size(); ++i) pt.push_back(sets_[i][idx[i]]);
        out.push_back(std::move(pt));
        int i = dim() - 1;
        while (i >= 0) {
            std::size_t ii = static_cast<std::size_t>(i);
            if (++idx[ii] < sets_[ii].size()) break;
            idx[ii] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

bool CartesianGrid::contains(const std::vector<FieldElem>& pt) const {
    if (pt.size() != sets_.size()) return false;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        bool found = false;
        for (const FieldElem& s : sets_[i])
            if (s == pt[i]) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

PointSet::PointSet(const Field& f, int m, std::vector<std::vector<FieldElem>> pts)
    : f_(f), m_(m), pts_(std::move(pts)) {
    if (m_ < 1) fail("DimensionMismatch", "points need at least one coordinate");
    std::set<std::string> seen;
    for (const auto& pt : pts_) {
        if (static_cast<int>(pt.size()) != m_)
            fail("DimensionMismatch", "point dimension differs from the ambient dimension");
        for (const FieldElem& e : pt)
            if (e.field() != f_) fail("SpecMismatch", "point coordinate from a different field");
        if (!seen.insert(point_key(pt)).second) fail("DuplicatePoints", "point list repeats a point");
    }
}

PointSet PointSet::empty(const Field& f, int m) { return PointSet(f, m, {}); }

// ---- polynomials ----

Polynomial::Polynomial(const Field& f, int m) : f_(f), m_(m) {
    if (m_ < 1) fail("DimensionMismatch", "polynomial needs at least one variable");
}

Polynomial Polynomial::from_term(const Field& f, const Monomial& mon, const FieldElem& c) {
    Polynomial p(f, mon.dim());
    p.set_coeff(mon, c);
    return p;
}

Polynomial Polynomial::constant(const Field& f, int m, const FieldElem& c) {
    return from_term(f, Monomial::unit(m), c);
}

FieldElem Polynomial::coeff(const Monomial& mon) const {
    auto it = terms_.find(mon);
    return it == terms_.end() ? f_.zero() : it->second;
}

void Polynomial::set_coeff(const Monomial& mon, const FieldElem& c) {
    if (mon.dim() != m_) fail("DimensionMismatch", "term dimension differs from the polynomial");
    if (c.field() != f_) fail("SpecMismatch", "coefficient from a different field");
    if (c.is_zero())
        terms_.erase(mon);
    else
        terms_[mon] = c;
}

long long Polynomial::total_degree() const {
    long long d = -1;
    for (const auto& [mon, c] : terms_) d = std::max(d, mon.degree());
    return d;
}

int Polynomial::partial_degree(int var) const {
    int d = 0;
    for (const auto& [mon, c] : terms_) d = std::max(d, mon.exp(var));
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (m_ != o.m_) fail("DimensionMismatch", "polynomial dimensions differ");
    Polynomial r = *this;
    for (const auto& [mon, c] : o.terms_) r.set_coeff(mon, r.coeff(mon) + c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (m_ != o.m_) fail("DimensionMismatch", "polynomial dimensions differ");
    Polynomial r = *this;
    for (const auto& [mon, c] : o.terms_) r.set_coeff(mon, r.coeff(mon) - c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (m_ != o.m_) fail("DimensionMismatch", "polynomial dimensions differ");
    Polynomial r(f_, m_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial mon = ma * mb;
            r.set_coeff(mon, r.coeff(mon) + ca * cb);
        }
    return r;
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
    Polynomial r(f_, m_);
    if (c.is_zero()) return r;
    for (const auto& [mon, cc] : terms_) r.set_coeff(mon, cc * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& mon) const {
    Polynomial r(f_, m_);
    for (const auto& [mo, c] : terms_) r.set_coeff(mo * mon, c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return m_ == o.m_ && f_ == o.f_ && terms_ == o.terms_;
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
    if (terms_.empty()) fail("ZeroPolynomial", "the zero polynomial has no leading monomial");
    const Monomial* best = nullptr;
    for (const auto& [mon, c] : terms_)
        if (!best || order.less(*best, mon)) best = &mon;
    return *best;
}

FieldElem Polynomial::leading_coefficient(const MonomialOrder& order) const {
    return coeff(leading_monomial(order));
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    return scaled(leading_coefficient(order).inverse());
}

FieldElem Polynomial::evaluate(const std::vector<FieldElem>& point) const {
    if (static_cast<int>(point.size()) != m_)
        fail("DimensionMismatch", "point dimension differs from the polynomial");
    FieldElem acc = f_.zero();
    for (const auto& [mon, c] : terms_) {
        FieldElem term = c;
        for (int i = 0; i < m_; ++i)
            if (mon.exp(i) > 0) term *= point[static_cast<std::size_t>(i)].pow(mon.exp(i));
        acc += term;
    }
    return acc;
}

std::vector<FieldElem> Polynomial::evaluate_on(const CartesianGrid& grid) const {
    if (grid.dim() != m_) fail("DimensionMismatch", "grid dimension differs from the polynomial");
    if (grid.field() != f_) fail("SpecMismatch", "grid over a different field");
    long long n = grid.size();
    if (n > kEnumerationBudget) fail("SearchBudgetExceeded", "grid too large to evaluate on");
    // pow_tab[i][j][k] = (j-th element of S_i)^k
    std::vector<std::vector<std::vector<FieldElem>>> pow_tab(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
        int maxe = partial_degree(i);
        const auto& s = grid.coordinate_set(i);
        pow_tab[static_cast<std::size_t>(i)].resize(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) {
            auto& tab = pow_tab[static_cast<std::size_t>(i)][j];
            tab.reserve(static_cast<std::size_t>(maxe) + 1);
            tab.push_back(f_.one());
            for (int k = 1; k <= maxe; ++k) tab.push_back(tab.back() * s[j]);
        }
    }
    std::vector<FieldElem> out;
    out.reserve(static_cast<std::size_t>(n));
    std::vector<std::size_t> idx(static_cast<std::size_t>(m_), 0);
    for (;;) {
        FieldElem acc = f_.zero();
        for (const auto& [mon, c] : terms_) {
            FieldElem term = c;
            for (int i = 0; i < m_; ++i)
                if (mon.exp(i) > 0)
                    term *= pow_tab[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]
                                   [static_cast<std::size_t>(mon.exp(i))];
            acc += term;
        }
        out.push_back(acc);
        int i = m_ - 1;
        while (i >= 0) {
            std::size_t ii = static_cast<std::size_t>(i);
            if (++idx[ii] < grid.coordinate_set(i).size()) break;
            idx[ii] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

std::string Polynomial::text() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mon, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string cs = c.render();
        bool unit_mon = mon == Monomial::unit(m_);
        bool simple = cs.find_first_of("+-/x") == std::string::npos;
        if (unit_mon) {
            s += simple ? cs : "(" + cs + ")";
        } else if (c.is_one()) {
            s += mon.text();
        } else {
            s += (simple ? cs : "(" + cs + ")") + "*" + mon.text();
        }
    }
    return s;
}

Polynomial parse_polynomial(const Field& f, int m, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail("ParseError", "empty polynomial literal");
    Polynomial out(f, m);
    std::size_t i = 0;
    while (i < s.size()) {
        bool negate = false;
        if (s[i] == '+' || s[i] == '-') {
            negate = s[i] == '-';
            ++i;
        }
        if (i >= s.size()) fail("ParseError", "dangling sign in polynomial");
        // One term: '*'-separated factors until the next top-level +/-.
        FieldElem coef = f.one();
        Monomial mon = Monomial::unit(m);
        bool factor_expected = true;
        while (i < s.size()) {
            if (s[i] == '*') {
                ++i;
                factor_expected = true;
                continue;
            }
            if ((s[i] == '+' || s[i] == '-') && !factor_expected) break;
            if (s[i] == '(') {
                int depth = 1;
                std::size_t j = i + 1;
                while (j < s.size() && depth > 0) {
                    if (s[j] == '(') ++depth;
                    if (s[j] == ')') --depth;
                    ++j;
                }
                if (depth != 0) fail("ParseError", "unbalanced parentheses");
                coef = coef * f.parse_element(s.substr(i + 1, j - i - 2));
                i = j;
            } else if ((s[i] == 'X' || s[i] == 'x') && i + 1 < s.size() &&
                       std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                std::size_t j = i;
                while (j < s.size() && (s[j] == 'X' || s[j] == 'x' || s[j] == '^' ||
                                        std::isdigit(static_cast<unsigned char>(s[j]))))
                    ++j;
                mon = mon * Monomial::parse_text(s.substr(i, j - i), m);
                i = j;
            } else {
                // Bare coefficient literal: digits, a rational, or a short
                // extension element like "x^2".
                std::size_t j = i;
                while (j < s.size() && s[j] != '*' && s[j] != '+' && s[j] != '-') ++j;
                coef = coef * f.parse_element(s.substr(i, j - i));
                i = j;
            }
            factor_expected = false;
        }
        if (factor_expected) fail("ParseError", "empty factor in polynomial");
        if (negate) coef = -coef;
        out.set_coeff(mon, out.coeff(mon) + coef);
    }
    return out;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& gens,
                  const MonomialOrder& order) {
    for (const Polynomial& g : gens)
        if (g.is_zero()) fail("ZeroGenerator", "zero generator in reduction");
    std::vector<Monomial> lms;
    std::vector<FieldElem> lcs;
    for (const Polynomial& g : gens) {
        lms.push_back(g.leading_monomial(order));
        lcs.push_back(g.coeff(lms.back()));
    }
    Polynomial work = f;
    Polynomial remainder(f.field(), f.dim());
    while (!work.is_zero()) {
        Monomial lm = work.leading_monomial(order);
        FieldElem lc = work.coeff(lm);
        bool reduced = false;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            if (!lms[gi].divides(lm)) continue;
            FieldElem factor = lc / lcs[gi];
            work = work - gens[gi].times_monomial(lm.div(lms[gi])).scaled(factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.set_coeff(lm, lc);
            work.set_coeff(lm, f.field().zero());
        }
    }
    return remainder;
}

std::vector<Polynomial> grid_generators(const CartesianGrid& grid) {
    std::vector<Polynomial> gens;
    const Field& f = grid.field();
    int m = grid.dim();
    for (int i = 0; i < m; ++i) {
        Polynomial p = Polynomial::constant(f, m, f.one());
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(i)] = 1;
        Monomial xi(e);
        for (const FieldElem& s : grid.coordinate_set(i)) {
            Polynomial lin = Polynomial::from_term(f, xi, f.one());
            lin.set_coeff(Monomial::unit(m), -s);
            p = p * lin;
        }
        gens.push_back(std::move(p));
    }
    return gens;
}

Polynomial witness_polynomial(const CartesianGrid& grid, const Monomial& n) {
    if (!grid.box().contains(n)) fail("MonomialOutsideBox", n.text() + " is outside the grid box");
    const Field& f = grid.field();
    int m = grid.dim();
    Polynomial p = Polynomial::constant(f, m, f.one());
    for (int i = 0; i < m; ++i) {
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(i)] = 1;
        Monomial xi(e);
        for (int j = 0; j < n.exp(i); ++j) {
            Polynomial lin = Polynomial::from_term(f, xi, f.one());
            lin.set_coeff(Monomial::unit(m), -grid.coordinate_set(i)[static_cast<std::size_t>(j)]);
            p = p * lin;
        }
    }
    return p;
}

RootCount count_common_roots(const std::vector<Polynomial>& polys, const CartesianGrid& grid) {
    if (polys.empty()) fail("EmptyInput", "no polynomials to evaluate");
    long long n = grid.size();
    if (n > kEnumerationBudget) fail("SearchBudgetExceeded", "grid too large to enumerate");
    std::vector<char> vanish(static_cast<std::size_t>(n), 1);
    for (const Polynomial& p : polys) {
        std::vector<FieldElem> vals = p.evaluate_on(grid);
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (!vals[i].is_zero()) vanish[i] = 0;
    }
    RootCount rc;
    for (char v : vanish)
        if (v) ++rc.roots;
    rc.non_roots = n - rc.roots;
    return rc;
}

}  // namespace gridroots
