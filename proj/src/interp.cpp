#include "gridroots/interp.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "gridroots/matrix.hpp"

namespace gridroots {

namespace {

constexpr long long kBoxWalkBudget = 2000000;

// Finite fields embed A in the full grid; over the rationals the
// coordinates of A are padded with fresh integers until every axis has at
// least mu(chain) values, which keeps the chain inside the box.
CartesianGrid embed_grid(const Field& f, int m, const PointSet& a,
                         const std::vector<Monomial>& chain) {
    if (f.is_finite()) return CartesianGrid::full(f, m);
    long long target = mu(chain);
    std::vector<std::vector<FieldElem>> sets(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        std::vector<FieldElem>& s = sets[static_cast<std::size_t>(i)];
        std::set<std::string> seen;  // canonical renders; exact over the rationals
        for (std::size_t p = 0; p < a.size(); ++p) {
            const FieldElem& c = a.point(p)[static_cast<std::size_t>(i)];
            if (seen.insert(c.render()).second) s.push_back(c);
        }
        for (long long next = 0; static_cast<long long>(s.size()) < target; ++next) {
            FieldElem c = f.from_int(next);
            if (seen.insert(c.render()).second) s.push_back(c);
        }
    }
    return CartesianGrid(f, std::move(sets));
}

// Box members N with N <= top under the order, ascending.
std::vector<Monomial> box_prefix(const BoxRegion& box, const MonomialOrder& order,
                                 const Monomial& top) {
    std::vector<Monomial> out;
    for (const Monomial& n : box.sorted_members(order)) {
        if (order.compare(n, top) > 0) break;
        out.push_back(n);
    }
    return out;
}

// Box members strictly below `first`, ascending.
std::vector<Monomial> box_before(const BoxRegion& box, const MonomialOrder& order,
                                 const Monomial& first) {
    std::vector<Monomial> out;
    for (const Monomial& n : box.sorted_members(order)) {
        if (order.compare(n, first) >= 0) break;
        out.push_back(n);
    }
    return out;
}

// Position of a grid point in row-major point order.
std::size_t grid_index_of(const CartesianGrid& grid, const std::vector<FieldElem>& pt) {
    std::size_t idx = 0;
    for (int i = 0; i < grid.dim(); ++i) {
        const std::vector<FieldElem>& s = grid.coordinate_set(i);
        std::size_t pos = s.size();
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s[j] == pt[static_cast<std::size_t>(i)]) {
                pos = j;
                break;
            }
        internal_check(pos < s.size(), "point is not on the grid");
        idx = idx * s.size() + pos;
    }
    return idx;
}

}  // namespace

InterpolationTask::InterpolationTask(const Field& f, const MonomialOrder& order,
                                     std::vector<Monomial> chain, PointSet points)
    : f_(f), order_(order), chain_(std::move(chain)), points_(std::move(points)) {
    if (chain_.empty()) fail("EmptyInput", "empty monomial chain");
    int m = order_.dim();
    for (const Monomial& mon : chain_)
        if (mon.dim() != m) fail("DimensionMismatch", "chain dimension differs from the order");
    if (points_.dim() != m) fail("DimensionMismatch", "point dimension differs from the order");
    if (points_.field() != f_) fail("SpecMismatch", "points over a different field");
    std::optional<BoxRegion> box;
    if (f_.is_finite()) {
        box = BoxRegion(std::vector<int>(static_cast<std::size_t>(m),
                                         static_cast<int>(f_.order())));
        if (box->count() > kBoxWalkBudget)
            fail("SearchBudgetExceeded", "field box too large to walk");
        for (const Monomial& mon : chain_)
            if (!box->contains(mon))
                fail("MonomialOutsideBox", mon.text() + " is outside the field box");
    }
    std::vector<Monomial> expect =
        consecutive_chain(order_, box, chain_.front(), static_cast<int>(chain_.size()));
    if (expect != chain_) fail("ChainNotConsecutive", "chain monomials are not consecutive");
}

GuaranteeReport guarantee_check(const InterpolationTask& task, int k) {
    int t = task.t();
    if (k < 1 || k > t) fail("KOutOfRange", "k must lie between 1 and the chain length");
    int pick = t - k + 1;
    long long combos = 1;
    for (int i = 0; i < pick; ++i) {
        combos = combos * (t - i) / (i + 1);
        if (combos > 200000) fail("SearchBudgetExceeded", "too many chain subsets");
    }
    std::vector<Monomial> sel;
    long long best = -1;
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth == pick) {
            long long v = mu(sel);
            if (best < 0 || v < best) best = v;
            return;
        }
        for (int i = from; i < t; ++i) {
            sel.push_back(task.chain()[static_cast<std::size_t>(i)]);
            self(self, i + 1, depth + 1);
            sel.pop_back();
        }
    };
    rec(rec, 0, 0);
    GuaranteeReport rep;
    rep.threshold = best;
    rep.satisfied = static_cast<long long>(task.points().size()) < best;
    return rep;
}

ShortfallError::ShortfallError(long long achieved, long long requested)
    : Error("GuaranteeUnmetAndConstructionFailed",
            "only " + std::to_string(achieved) + " of the requested " +
                std::to_string(requested) + " leading monomials are attainable"),
      achieved_(achieved) {}

std::vector<Polynomial> interpolate(const InterpolationTask& task, int k) {
    int t = task.t();
    if (k < 1 || k > t) fail("KOutOfRange", "k must lie between 1 and the chain length");
    const Field& f = task.field();
    const MonomialOrder& ord = task.order();
    int m = task.dim();
    GuaranteeReport guarantee = guarantee_check(task, k);

    CartesianGrid grid = embed_grid(f, m, task.points(), task.chain());
    BoxRegion box = grid.box();
    std::vector<Monomial> w1 = box_prefix(box, ord, task.chain().back());
    std::size_t k1 = w1.size();

    // Row per point, column per basis monomial.
    std::size_t npts = task.points().size();
    Matrix ev(f, npts, k1);
    for (std::size_t p = 0; p < npts; ++p) {
        const std::vector<FieldElem>& pt = task.points().point(p);
        std::vector<std::vector<FieldElem>> pw(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            std::vector<FieldElem>& row = pw[static_cast<std::size_t>(i)];
            row.resize(static_cast<std::size_t>(box.cap(i)), f.one());
            for (std::size_t e = 1; e < row.size(); ++e)
                row[e] = row[e - 1] * pt[static_cast<std::size_t>(i)];
        }
        for (std::size_t j = 0; j < k1; ++j) {
            FieldElem v = f.one();
            for (int i = 0; i < m; ++i)
                v *= pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(w1[j].exp(i))];
            ev.at(p, j) = v;
        }
    }

    std::vector<std::size_t> tops;
    Matrix ech = ev.nullspace().top_echelon(&tops);

    std::map<Monomial, int> chain_pos;
    for (int i = 0; i < t; ++i) chain_pos[task.chain()[static_cast<std::size_t>(i)]] = i;

    auto row_poly = [&](std::size_t rr) {
        Polynomial p(f, m);
        for (std::size_t j = 0; j < k1; ++j)
            if (!ech.at(rr, j).is_zero()) p.set_coeff(w1[j], ech.at(rr, j));
        return p;
    };

    std::vector<std::optional<Polynomial>> claimed(static_cast<std::size_t>(t));
    struct Floater {
        std::size_t row;
        Monomial lm;
    };
    std::vector<Floater> floaters;
    for (std::size_t rr = 0; rr < ech.rows(); ++rr) {
        const Monomial& lm = w1[tops[rr]];
        auto it = chain_pos.find(lm);
        if (it != chain_pos.end()) {
            claimed[static_cast<std::size_t>(it->second)] = row_poly(rr);
        } else {
            // Consecutiveness forces every non-chain top below the chain.
            internal_check(ord.compare(lm, task.chain().front()) < 0,
                           "nullspace top falls inside the chain gap");
            floaters.push_back(Floater{rr, lm});
        }
    }

    // Each floater may be lifted to any unclaimed chain monomial it
    // divides; maximize the number of chain monomials reached. Floaters
    // and targets are tried largest first, augmenting paths cover the
    // cases the greedy pass would miss.
    std::sort(floaters.begin(), floaters.end(),
              [&](const Floater& x, const Floater& y) { return ord.compare(x.lm, y.lm) > 0; });
    std::vector<std::vector<int>> adj(floaters.size());
    for (std::size_t fi = 0; fi < floaters.size(); ++fi)
        for (int ci = t - 1; ci >= 0; --ci)
            if (!claimed[static_cast<std::size_t>(ci)] &&
                floaters[fi].lm.divides(task.chain()[static_cast<std::size_t>(ci)]))
                adj[fi].push_back(ci);
    std::vector<int> target_of(floaters.size(), -1);
    std::vector<int> floater_of(static_cast<std::size_t>(t), -1);
    auto augment = [&](auto&& self, std::size_t fi, std::vector<bool>& seen) -> bool {
        for (int ci : adj[fi]) {
            if (seen[static_cast<std::size_t>(ci)]) continue;
            seen[static_cast<std::size_t>(ci)] = true;
            if (floater_of[static_cast<std::size_t>(ci)] < 0 ||
                self(self, static_cast<std::size_t>(floater_of[static_cast<std::size_t>(ci)]),
                     seen)) {
                floater_of[static_cast<std::size_t>(ci)] = static_cast<int>(fi);
                target_of[fi] = ci;
                return true;
            }
        }
        return false;
    };
    for (std::size_t fi = 0; fi < floaters.size(); ++fi) {
        std::vector<bool> seen(static_cast<std::size_t>(t), false);
        augment(augment, fi, seen);
    }

    std::vector<Polynomial> gens = grid_generators(grid);
    for (std::size_t fi = 0; fi < floaters.size(); ++fi) {
        if (target_of[fi] < 0) continue;
        const Monomial& goal = task.chain()[static_cast<std::size_t>(target_of[fi])];
        Monomial cofactor = goal.div(floaters[fi].lm);
        Polynomial lifted =
            reduce(row_poly(floaters[fi].row).times_monomial(cofactor), gens, ord);
        internal_check(!lifted.is_zero() && lifted.leading_monomial(ord) == goal,
                       "cofactor lift lost its leading monomial");
        claimed[static_cast<std::size_t>(target_of[fi])] = std::move(lifted);
    }

    long long achieved = 0;
    for (const auto& c : claimed)
        if (c) ++achieved;
    if (achieved < k) {
        internal_check(!guarantee.satisfied, "guaranteed construction fell short");
        throw ShortfallError(achieved, k);
    }

    std::vector<Polynomial> out;
    for (int i = 0; i < t && static_cast<int>(out.size()) < k; ++i)
        if (claimed[static_cast<std::size_t>(i)])
            out.push_back(claimed[static_cast<std::size_t>(i)]->monic(ord));

    std::set<Monomial> lms_seen;
    for (const Polynomial& p : out) {
        internal_check(!p.is_zero(), "zero polynomial returned");
        Monomial lm = p.leading_monomial(ord);
        internal_check(chain_pos.find(lm) != chain_pos.end() && lms_seen.insert(lm).second,
                       "leading-monomial contract broken");
        for (std::size_t pi = 0; pi < npts; ++pi)
            internal_check(p.evaluate(task.points().point(pi)).is_zero(),
                           "returned polynomial misses a point");
        if (f.is_finite())
            for (const auto& [mon, coef] : p.terms())
                internal_check(box.contains(mon), "support escapes the field box");
    }
    return out;
}

long long capacity(const InterpolationTask& task) {
    const Field& f = task.field();
    if (!f.is_finite()) fail("InfiniteField", "capacity needs a finite field");
    int m = task.dim();
    long long t = task.t();
    CartesianGrid grid = CartesianGrid::full(f, m);
    BoxRegion box = grid.box();
    std::vector<Monomial> w1 = box_prefix(box, task.order(), task.chain().back());
    std::vector<Monomial> w2 = box_before(box, task.order(), task.chain().front());
    internal_check(static_cast<long long>(w1.size()) ==
                       static_cast<long long>(w2.size()) + t,
                   "chain does not partition the box prefix");
    LinearCode c1 = eval_code(grid, w1);
    LinearCode c2 = eval_code(grid, w2);
    IndexSet aidx;
    for (std::size_t p = 0; p < task.points().size(); ++p)
        aidx.push_back(grid_index_of(grid, task.points().point(p)));
    std::sort(aidx.begin(), aidx.end());
    IndexSet abar = complement_indices(c1.length(), aidx);
    long long direct = static_cast<long long>(supported_subcode(c1, abar).dim()) -
                       static_cast<long long>(supported_subcode(c2, abar).dim());
    long long via_dual =
        t - (static_cast<long long>(supported_subcode(dual_code(c2), aidx).dim()) -
             static_cast<long long>(supported_subcode(dual_code(c1), aidx).dim()));
    internal_check(direct == via_dual, "capacity routes disagree");
    return direct;
}

PointSet sharpness_witness(const Field& f, const MonomialOrder& order,
                           const std::vector<Monomial>& chain, int k) {
    if (!f.is_finite()) fail("InfiniteField", "sharpness witness needs a finite field");
    int m = order.dim();
    InterpolationTask probe(f, order, chain, PointSet::empty(f, m));
    int t = probe.t();
    if (k < 1 || k > t) fail("KOutOfRange", "k must lie between 1 and the chain length");
    CartesianGrid grid = CartesianGrid::full(f, m);
    BoxRegion box = grid.box();
    std::vector<Monomial> w1 = box_prefix(box, order, chain.back());
    std::vector<Monomial> w2 = box_before(box, order, chain.front());
    LinearCode c1 = eval_code(grid, w1);
    LinearCode c2 = eval_code(grid, w2);
    RghwResult res = rghw_bruteforce(dual_code(c2), dual_code(c1), t - k + 1);
    std::vector<std::vector<FieldElem>> pts;
    std::vector<std::vector<FieldElem>> all = grid.points();
    for (std::size_t i : res.support) pts.push_back(all[i]);
    PointSet a(f, m, std::move(pts));
    internal_check(capacity(InterpolationTask(f, order, chain, a)) < k,
                   "witness does not defeat the guarantee");
    return a;
}

Polynomial low_degree_vanishing(const Field& f, int m, long long d, const PointSet& a) {
    if (m < 1) fail("DimensionMismatch", "need at least one variable");
    if (d < 0) fail("DegreeOutOfRange", "degree must be nonnegative");
    if (a.dim() != m) fail("DimensionMismatch", "point dimension mismatch");
    if (a.field() != f) fail("SpecMismatch", "points over a different field");
    BigInt threshold;
    std::optional<BoxRegion> box;
    if (f.is_finite()) {
        box = BoxRegion(std::vector<int>(static_cast<std::size_t>(m),
                                         static_cast<int>(f.order())));
        if (box->count() > kBoxWalkBudget)
            fail("SearchBudgetExceeded", "field box too large to walk");
        threshold = rm_dimension(*box, d);
    } else {
        threshold = 1;  // (d+m choose m), the integer product form
        for (long long i = 1; i <= m; ++i) threshold = threshold * (d + i) / i;
    }
    if (BigInt(a.size()) >= threshold)
        fail("CardinalityTooLarge", "too many points for the degree");
    if (a.size() == 0) return Polynomial::constant(f, m, f.one());

    MonomialOrder ord = MonomialOrder::deglex(m);
    long long slice_deg = d;
    if (box) {
        long long top = static_cast<long long>(m) * (static_cast<long long>(f.order()) - 1);
        slice_deg = std::min(d, top);
    }
    std::vector<Monomial> chain;
    if (box) {
        for (const Monomial& n : box->sorted_members(ord))
            if (n.degree() == slice_deg) chain.push_back(n);
    } else {
        chain = degree_slice(m, slice_deg);
        std::sort(chain.begin(), chain.end(),
                  [&](const Monomial& x, const Monomial& y) { return ord.less(x, y); });
    }
    InterpolationTask task(f, ord, chain, a);
    std::vector<Polynomial> got;
    try {
        got = interpolate(task, 1);
    } catch (const ShortfallError&) {
        internal_check(false, "a vanishing polynomial must exist below the dimension threshold");
    }
    internal_check(got.front().total_degree() <= d, "degree bound broken");
    return got.front();
}

}  // namespace gridroots
