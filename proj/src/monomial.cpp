#include "gridroots/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gridroots {

namespace {

constexpr long long kEnumerationBudget = 2000000;

void require_dim(int a, int b, const char* what) {
    if (a != b) fail("DimensionMismatch", std::string(what) + " dimension mismatch");
}

std::string strip(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    return s;
}

}  // namespace

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    if (e_.empty()) fail("DimensionMismatch", "monomial needs at least one variable");
    for (int v : e_)
        if (v < 0) fail("ParseError", "negative exponent");
}

Monomial Monomial::unit(int m) {
    if (m < 1) fail("DimensionMismatch", "monomial needs at least one variable");
    return Monomial(std::vector<int>(static_cast<std::size_t>(m), 0));
}

long long Monomial::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0LL);
}

bool Monomial::divides(const Monomial& n) const {
    require_dim(dim(), n.dim(), "divides");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > n.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    require_dim(dim(), o.dim(), "product");
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return Monomial(std::move(r));
}

Monomial Monomial::div(const Monomial& o) const {
    require_dim(dim(), o.dim(), "quotient");
    if (!o.divides(*this)) fail("ParseError", o.text() + " does not divide " + text());
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] - o.e_[i];
    return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    require_dim(a.dim(), b.dim(), "gcd");
    std::vector<int> r(a.e_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a.e_[i], b.e_[i]);
    return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    require_dim(a.dim(), b.dim(), "lcm");
    std::vector<int> r(a.e_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(r));
}

std::string Monomial::text() const {
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "X" + std::to_string(i + 1);
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

Monomial Monomial::parse_text(std::string_view text, int dim_hint) {
    std::string s = strip(text);
    if (s.empty()) fail("ParseError", "empty monomial literal");
    std::vector<std::pair<int, int>> factors;  // (0-based variable, exponent)
    int max_var = 0;
    if (s != "1") {
        std::size_t i = 0;
        while (i < s.size()) {
            if (s[i] == '*') {
                ++i;
                continue;
            }
            if (s[i] != 'X' && s[i] != 'x')
                fail("ParseError", "bad monomial literal '" + s + "'");
            ++i;
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                fail("ParseError", "variable index missing in '" + s + "'");
            int var = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                var = var * 10 + (s[i] - '0');
                if (var > 1000000) fail("ParseError", "variable index too large");
                ++i;
            }
            if (var < 1) fail("ParseError", "variables are numbered from X1");
            int exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    fail("ParseError", "bad exponent in '" + s + "'");
                exp = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    exp = exp * 10 + (s[i] - '0');
                    if (exp > 1000000) fail("ParseError", "exponent too large");
                    ++i;
                }
            }
            factors.emplace_back(var - 1, exp);
            max_var = std::max(max_var, var);
        }
    }
    int m = dim_hint >= 1 ? dim_hint : std::max(max_var, 1);
    if (max_var > m)
        fail("DimensionMismatch", "monomial mentions X" + std::to_string(max_var) +
                                      " but the dimension is " + std::to_string(m));
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    for (auto [v, k] : factors) e[static_cast<std::size_t>(v)] += k;
    return Monomial(std::move(e));
}

// ---- orders ----

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> perm)
    : kind_(kind), perm_(std::move(perm)) {
    int m = static_cast<int>(perm_.size());
    if (m < 1) fail("DimensionMismatch", "order needs at least one variable");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v : perm_) {
        if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)])
            fail("ParseError", "significance list must mention every variable once");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

MonomialOrder MonomialOrder::lex(int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    return MonomialOrder(OrderKind::Lex, std::move(perm));
}

MonomialOrder MonomialOrder::deglex(int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    return MonomialOrder(OrderKind::DegLex, std::move(perm));
}

MonomialOrder MonomialOrder::degrevlex(int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    return MonomialOrder(OrderKind::DegRevLex, std::move(perm));
}

MonomialOrder MonomialOrder::parse(std::string_view text) {
    std::string s = strip(text);
    auto colon = s.find(':');
    if (colon == std::string::npos) fail("ParseError", "order spec needs 'kind:X..<X..'");
    std::string kind_s = s.substr(0, colon);
    std::transform(kind_s.begin(), kind_s.end(), kind_s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    OrderKind kind;
    if (kind_s == "lex")
        kind = OrderKind::Lex;
    else if (kind_s == "deglex")
        kind = OrderKind::DegLex;
    else if (kind_s == "degrevlex")
        kind = OrderKind::DegRevLex;
    else
        fail("ParseError", "unknown order kind '" + kind_s + "'");

    std::vector<int> perm;
    std::string rest = s.substr(colon + 1);
    std::size_t i = 0;
    while (i < rest.size()) {
        if (rest[i] == '<') {
            ++i;
            continue;
        }
        if (rest[i] != 'X' && rest[i] != 'x') fail("ParseError", "bad variable in order spec");
        ++i;
        int var = 0;
        bool any = false;
        while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) {
            var = var * 10 + (rest[i] - '0');
            any = true;
            ++i;
        }
        if (!any || var < 1) fail("ParseError", "bad variable index in order spec");
        perm.push_back(var - 1);
    }
    if (perm.empty()) fail("ParseError", "order spec lists no variables");
    return MonomialOrder(kind, std::move(perm));
}

std::string MonomialOrder::render() const {
    std::string s;
    switch (kind_) {
        case OrderKind::Lex: s = "lex:"; break;
        case OrderKind::DegLex: s = "deglex:"; break;
        case OrderKind::DegRevLex: s = "degrevlex:"; break;
    }
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        if (i) s += "<";
        s += "X" + std::to_string(perm_[i] + 1);
    }
    return s;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    require_dim(a.dim(), dim(), "order compare");
    require_dim(b.dim(), dim(), "order compare");
    if (kind_ != OrderKind::Lex) {
        long long da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
    }
    if (kind_ == OrderKind::DegRevLex) {
        // First difference from the least significant end; the larger
        // exponent there marks the smaller monomial.
        for (int i = 0; i < dim(); ++i) {
            int v = perm_[static_cast<std::size_t>(i)];
            if (a.exp(v) != b.exp(v)) return a.exp(v) > b.exp(v) ? -1 : 1;
        }
        return 0;
    }
    for (int i = dim(); i-- > 0;) {
        int v = perm_[static_cast<std::size_t>(i)];
        if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v) ? -1 : 1;
    }
    return 0;
}

// ---- box ----

BoxRegion::BoxRegion(std::vector<int> caps) : caps_(std::move(caps)) {
    if (caps_.empty()) fail("DimensionMismatch", "box needs at least one variable");
    for (int c : caps_)
        if (c < 1) fail("ParseError", "box caps must be positive");
}

long long BoxRegion::count() const {
    long long n = 1;
    for (int c : caps_) {
        if (n > 2000000000000000000LL / c) fail("SearchBudgetExceeded", "box too large to count");
        n *= c;
    }
    return n;
}

bool BoxRegion::contains(const Monomial& mon) const {
    require_dim(mon.dim(), dim(), "box membership");
    for (int i = 0; i < dim(); ++i)
        if (mon.exp(i) >= caps_[static_cast<std::size_t>(i)]) return false;
    return true;
}

Monomial BoxRegion::apex() const {
    std::vector<int> e(caps_.size());
    for (std::size_t i = 0; i < caps_.size(); ++i) e[i] = caps_[i] - 1;
    return Monomial(std::move(e));
}

std::vector<Monomial> BoxRegion::members() const {
    long long n = count();
    if (n > kEnumerationBudget) fail("SearchBudgetExceeded", "box too large to enumerate");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(n));
    std::vector<int> e(caps_.size(), 0);
    for (;;) {
        out.push_back(Monomial(e));
        int i = dim() - 1;
        while (i >= 0) {
            if (++e[static_cast<std::size_t>(i)] < caps_[static_cast<std::size_t>(i)]) break;
            e[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

std::vector<Monomial> BoxRegion::sorted_members(const MonomialOrder& order) const {
    require_dim(order.dim(), dim(), "box sort");
    std::vector<Monomial> out = members();
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
    return out;
}

// ---- counting ----

long long mu_enumerate(const std::vector<Monomial>& ns) {
    if (ns.empty()) fail("EmptyInput", "mu of an empty family");
    int m = ns[0].dim();
    std::vector<int> caps(static_cast<std::size_t>(m), 1);
    for (const Monomial& n : ns) {
        require_dim(n.dim(), m, "mu");
        for (int i = 0; i < m; ++i)
            caps[static_cast<std::size_t>(i)] =
                std::max(caps[static_cast<std::size_t>(i)], n.exp(i) + 1);
    }
    BoxRegion hull(caps);
    long long count = 0;
    for (const Monomial& d : hull.members())
        for (const Monomial& n : ns)
            if (d.divides(n)) {
                ++count;
                break;
            }
    return count;
}

namespace {

long long mu_inclusion_exclusion(const std::vector<Monomial>& ns) {
    int s = static_cast<int>(ns.size());
    int m = ns[0].dim();
    std::vector<std::vector<int>> g(1ULL << s);
    long long total = 0;
    for (std::uint64_t mask = 1; mask < (1ULL << s); ++mask) {
        std::uint64_t low = mask & (~mask + 1);
        int low_i = __builtin_ctzll(mask);
        std::uint64_t rest = mask ^ low;
        if (rest == 0) {
            g[mask] = ns[static_cast<std::size_t>(low_i)].exps();
        } else {
            g[mask] = g[rest];
            for (int i = 0; i < m; ++i)
                g[mask][static_cast<std::size_t>(i)] = std::min(
                    g[mask][static_cast<std::size_t>(i)], ns[static_cast<std::size_t>(low_i)].exp(i));
        }
        long long divisors = 1;
        for (int v : g[mask]) divisors *= v + 1;
        total += (__builtin_popcountll(mask) % 2 == 1) ? divisors : -divisors;
    }
    return total;
}

long long bounding_cells(const std::vector<Monomial>& ns) {
    int m = ns[0].dim();
    long long cells = 1;
    for (int i = 0; i < m; ++i) {
        int cap = 1;
        for (const Monomial& n : ns) cap = std::max(cap, n.exp(i) + 1);
        if (cells > 4000000000000000000LL / cap) return 4000000000000000000LL;
        cells *= cap;
    }
    return cells;
}

}  // namespace

long long mu(const std::vector<Monomial>& ns) {
    if (ns.empty()) fail("EmptyInput", "mu of an empty family");
    int m = ns[0].dim();
    for (const Monomial& n : ns) require_dim(n.dim(), m, "mu");
    bool small_family = ns.size() <= 20;
    bool small_hull = bounding_cells(ns) <= kEnumerationBudget;
    if (!small_family && !small_hull)
        fail("SearchBudgetExceeded", "mu instance too large for both methods");
    std::optional<long long> ie, direct;
    if (small_family) ie = mu_inclusion_exclusion(ns);
    if (small_hull) direct = mu_enumerate(ns);
    if (ie && direct)
        internal_check(*ie == *direct, "mu: inclusion-exclusion disagrees with enumeration");
    return ie ? *ie : *direct;
}

long long sigma_enumerate(const BoxRegion& box, const std::vector<Monomial>& ms) {
    if (ms.empty()) fail("EmptyInput", "sigma of an empty family");
    for (const Monomial& mo : ms) {
        require_dim(mo.dim(), box.dim(), "sigma");
        if (!box.contains(mo)) fail("MonomialOutsideBox", mo.text() + " is outside the box");
    }
    long long count = 0;
    for (const Monomial& member : box.members())
        for (const Monomial& mo : ms)
            if (mo.divides(member)) {
                ++count;
                break;
            }
    return count;
}

namespace {

long long sigma_inclusion_exclusion(const BoxRegion& box, const std::vector<Monomial>& ms) {
    int s = static_cast<int>(ms.size());
    int m = box.dim();
    std::vector<std::vector<int>> l(1ULL << s);
    long long total = 0;
    for (std::uint64_t mask = 1; mask < (1ULL << s); ++mask) {
        int low_i = __builtin_ctzll(mask);
        std::uint64_t rest = mask ^ (mask & (~mask + 1));
        if (rest == 0) {
            l[mask] = ms[static_cast<std::size_t>(low_i)].exps();
        } else {
            l[mask] = l[rest];
            for (int i = 0; i < m; ++i)
                l[mask][static_cast<std::size_t>(i)] = std::max(
                    l[mask][static_cast<std::size_t>(i)], ms[static_cast<std::size_t>(low_i)].exp(i));
        }
        long long multiples = 1;
        for (int i = 0; i < m; ++i)
            multiples *= std::max(0, box.cap(i) - l[mask][static_cast<std::size_t>(i)]);
        total += (__builtin_popcountll(mask) % 2 == 1) ? multiples : -multiples;
    }
    return total;
}

}  // namespace

long long sigma(const BoxRegion& box, const std::vector<Monomial>& ms) {
    if (ms.empty()) fail("EmptyInput", "sigma of an empty family");
    for (const Monomial& mo : ms) {
        require_dim(mo.dim(), box.dim(), "sigma");
        if (!box.contains(mo)) fail("MonomialOutsideBox", mo.text() + " is outside the box");
    }
    bool small_family = ms.size() <= 20;
    bool small_box = box.count() <= kEnumerationBudget;
    if (!small_family && !small_box)
        fail("SearchBudgetExceeded", "sigma instance too large for both methods");
    std::optional<long long> ie, direct;
    if (small_family) ie = sigma_inclusion_exclusion(box, ms);
    if (small_box) direct = sigma_enumerate(box, ms);
    if (ie && direct)
        internal_check(*ie == *direct, "sigma: inclusion-exclusion disagrees with enumeration");
    return ie ? *ie : *direct;
}

Monomial complement_in(const BoxRegion& box, const Monomial& mon) {
    if (!box.contains(mon)) fail("MonomialOutsideBox", mon.text() + " is outside the box");
    std::vector<int> e(static_cast<std::size_t>(box.dim()));
    for (int i = 0; i < box.dim(); ++i)
        e[static_cast<std::size_t>(i)] = box.cap(i) - 1 - mon.exp(i);
    return Monomial(std::move(e));
}

std::vector<Monomial> degree_slice(int m, long long d) {
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    // Count first so the budget guard fires before any allocation burst.
    long long size = 1;
    for (int i = 1; i < m; ++i) {
        size = size * (d + i) / i;
        if (size > kEnumerationBudget) fail("SearchBudgetExceeded", "degree slice too large");
    }
    auto rec = [&](auto&& self, int var, long long left) -> void {
        if (var == m - 1) {
            if (left > 1000000) fail("SearchBudgetExceeded", "degree slice exponent too large");
            e[static_cast<std::size_t>(var)] = static_cast<int>(left);
            out.push_back(Monomial(e));
            return;
        }
        for (long long k = 0; k <= left; ++k) {
            if (k > 1000000) fail("SearchBudgetExceeded", "degree slice exponent too large");
            e[static_cast<std::size_t>(var)] = static_cast<int>(k);
            self(self, var + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

namespace {

// Smallest monomial strictly above `mon` in the unrestricted order.
Monomial successor(const MonomialOrder& order, const Monomial& mon) {
    int m = order.dim();
    if (order.order_kind() == OrderKind::Lex) {
        std::vector<int> e = mon.exps();
        e[static_cast<std::size_t>(order.significance()[0])] += 1;
        return Monomial(std::move(e));
    }
    long long d = mon.degree();
    std::vector<Monomial> level = degree_slice(m, d);
    std::sort(level.begin(), level.end(),
              [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
    auto it = std::find(level.begin(), level.end(), mon);
    internal_check(it != level.end(), "monomial missing from its degree slice");
    if (it + 1 != level.end()) return *(it + 1);
    std::vector<Monomial> next = degree_slice(m, d + 1);
    return *std::min_element(next.begin(), next.end(), [&](const Monomial& a, const Monomial& b) {
        return order.less(a, b);
    });
}

}  // namespace

std::vector<Monomial> consecutive_chain(const MonomialOrder& order,
                                        const std::optional<BoxRegion>& box,
                                        const Monomial& start, int t) {
    require_dim(start.dim(), order.dim(), "chain");
    if (t < 1) fail("EmptyInput", "chain length must be at least 1");
    if (box) {
        require_dim(box->dim(), order.dim(), "chain");
        if (!box->contains(start)) fail("MonomialOutsideBox", start.text() + " is outside the box");
        std::vector<Monomial> sorted = box->sorted_members(order);
        auto it = std::find(sorted.begin(), sorted.end(), start);
        internal_check(it != sorted.end(), "box member missing after sort");
        if (std::distance(it, sorted.end()) < t)
            fail("ChainLeavesBox", "only " + std::to_string(std::distance(it, sorted.end())) +
                                       " monomials available from " + start.text());
        return std::vector<Monomial>(it, it + t);
    }
    std::vector<Monomial> chain;
    chain.reserve(static_cast<std::size_t>(t));
    chain.push_back(start);
    for (int i = 1; i < t; ++i) chain.push_back(successor(order, chain.back()));
    return chain;
}

long long rm_dimension(const BoxRegion& box, long long d) {
    if (d < 0) return 0;
    std::vector<long long> ways{1};  // ways[s] = members of the partial box with degree s
    for (int i = 0; i < box.dim(); ++i) {
        std::size_t cap = static_cast<std::size_t>(box.cap(i));
        std::vector<long long> next(std::min<std::size_t>(ways.size() + cap - 1,
                                                          static_cast<std::size_t>(d) + 1),
                                    0);
        for (std::size_t s = 0; s < ways.size(); ++s)
            for (std::size_t k = 0; k < cap && s + k < next.size(); ++k) next[s + k] += ways[s];
        ways = std::move(next);
    }
    long long total = 0;
    for (long long w : ways) total += w;
    return total;
}

}  // namespace gridroots
