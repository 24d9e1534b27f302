#pragma once

#include <set>
#include <vector>

#include "matching.hpp"

namespace pmod {

// A half-open continuous bar [r, R); no death means R = infinity.
struct ContinuousBar {
    Rat r;
    std::optional<Rat> death;
    int mult = 1;
};

using ContinuousBarcode = std::vector<ContinuousBar>;

inline void check_continuous_bar(const ContinuousBar& bar) {
    if (bar.mult < 1) throw ValidationError("bar multiplicity must be >= 1");
    if (bar.death && !(bar.r < *bar.death)) throw ValidationError("continuous bar needs r < R");
}

// An increasing chain of finite coordinate supersets of the base set L.
struct RefinementSchedule {
    std::vector<Rat> base;
    std::vector<std::vector<Rat>> steps;
};

inline Rat mesh(const std::vector<Rat>& coords) {
    Rat m = 0;
    for (std::size_t i = 1; i < coords.size(); ++i) m = std::max(m, Rat(coords[i] - coords[i - 1]));
    return m;
}

// L, then repeated midpoint insertion: k+1 steps of mesh halving.
inline RefinementSchedule midpoint_schedule(std::vector<Rat> L, int k) {
    std::sort(L.begin(), L.end());
    L.erase(std::unique(L.begin(), L.end()), L.end());
    if (L.empty()) throw ValidationError("schedule base must be nonempty");
    RefinementSchedule s;
    s.base = L;
    s.steps.push_back(L);
    for (int step = 0; step < k; ++step) {
        const auto& prev = s.steps.back();
        std::vector<Rat> next;
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next.push_back(prev[i]);
            if (i + 1 < prev.size()) next.push_back((prev[i] + prev[i + 1]) / 2);
        }
        s.steps.push_back(std::move(next));
    }
    return s;
}

// delta^X: each continuous bar becomes the interval spanning X intersect [r, R).
inline Barcode restrict_delta(const WeightedPoset& X, const ContinuousBarcode& B) {
    Barcode out;
    for (const auto& bar : B) {
        check_continuous_bar(bar);
        int lo = -1, hi = -1;
        for (int i = 0; i < X.size(); ++i) {
            if (X.coord(i) < bar.r) continue;
            if (bar.death && !(X.coord(i) < *bar.death)) break;
            if (lo < 0) lo = i;
            hi = i;
        }
        if (lo >= 0) out.push_back({Interval{lo, hi}, bar.mult});
    }
    return canonical_barcode(out);
}

inline void check_subset(const WeightedPoset& X, const WeightedPoset& Y) {
    for (const Rat& x : X.points())
        if (!Y.index_of(x)) throw NotASubset("X is not a subset of Y");
}

// j(X,Y) on barcodes: [a, b] maps to [a, max(Y intersect [b, b^{+1}))]
// where b^{+1} is the successor of b in X (infinity at the top).
inline Barcode inflate_module(const WeightedPoset& X, const WeightedPoset& Y, const Barcode& B) {
    check_subset(X, Y);
    Barcode out;
    for (const auto& bar : B) {
        check_interval(X, bar.iv);
        int lo = *Y.index_of(X.coord(bar.iv.lo));
        int hi = *Y.index_of(X.coord(bar.iv.hi));
        bool has_next = bar.iv.hi + 1 < X.size();
        while (hi + 1 < Y.size() && (!has_next || Y.coord(hi + 1) < X.coord(bar.iv.hi + 1))) ++hi;
        out.push_back({Interval{lo, hi}, bar.mult});
    }
    return canonical_barcode(out);
}

// Index in X of the largest x <= y, or -1 when y lies below min(X).
inline int floor_index(const WeightedPoset& X, const Rat& y) {
    int i = -1;
    while (i + 1 < X.size() && X.coord(i + 1) <= y) ++i;
    return i;
}

// Lambda-bar: y maps to max{y, Lambda(x_y)} with x_y the largest element of
// X below y; points below min(X) are fixed.
inline Translation inflate_translation(const WeightedPoset& X, const WeightedPoset& Y, const Translation& lam) {
    check_subset(X, Y);
    check_translation(X, lam);
    Translation out;
    for (int j = 0; j < Y.size(); ++j) {
        int i = floor_index(X, Y.coord(j));
        if (i < 0) {
            out.img.push_back(PosetPoint::finite(j));
            continue;
        }
        PosetPoint q = lam(PosetPoint::finite(i));
        if (q.is_inf()) {
            out.img.push_back(PosetPoint::infinity());
            continue;
        }
        int jy = *Y.index_of(X.coord(q.idx));
        out.img.push_back(std::max(PosetPoint::finite(j), PosetPoint::finite(jy)));
    }
    out.img.push_back(PosetPoint::infinity());
    return out;
}

// j(X,Y) on representations: the fiber at y is the fiber at x_y.
inline Rep inflate_rep(const WeightedPoset& X, const WeightedPoset& Y, const Rep& R) {
    check_subset(X, Y);
    check_rep(X, R);
    Rep out;
    out.p = R.p;
    for (int j = 0; j < Y.size(); ++j) {
        int i = floor_index(X, Y.coord(j));
        out.dims.push_back(i < 0 ? 0 : R.dims[i]);
    }
    for (int j = 0; j + 1 < Y.size(); ++j) {
        int a = floor_index(X, Y.coord(j)), b = floor_index(X, Y.coord(j + 1));
        if (a < 0)
            out.maps.emplace_back(out.dims[j + 1], 0, R.p);
        else
            out.maps.push_back(composite_map(R, a, b));
    }
    return out;
}

// j(X,Y) on morphisms: the vertex matrix at y is the matrix at x_y.
inline RepMorphism inflate_morphism(const WeightedPoset& X, const WeightedPoset& Y, const RepMorphism& f) {
    check_subset(X, Y);
    if (f.phi.empty() || static_cast<int>(f.phi.size()) != X.size())
        throw ValidationError("morphism size does not match X");
    uint32_t p = f.phi[0].prime();
    RepMorphism out;
    for (int j = 0; j < Y.size(); ++j) {
        int i = floor_index(X, Y.coord(j));
        out.phi.push_back(i < 0 ? FpMat(0, 0, p) : f.phi[i]);
    }
    return out;
}

inline constexpr std::size_t kShiftGuard = 10000;

// The shift refinement Sh(X): close Y = X union {x - eps} under one pass of
// subtracting each pairwise distance eps from the predecessor of each y in Y,
// walking Y from greatest to least.
inline std::vector<Rat> shift_refinement(std::vector<Rat> X, std::size_t guard = kShiftGuard) {
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    if (X.empty()) throw ValidationError("shift_refinement of an empty set");
    std::vector<Rat> N1;
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j) N1.push_back(X[j] - X[i]);
    std::sort(N1.begin(), N1.end());
    N1.erase(std::unique(N1.begin(), N1.end()), N1.end());
    std::set<Rat> Z(X.begin(), X.end());
    for (const Rat& x : X)
        for (const Rat& e : N1) Z.insert(x - e);
    std::vector<Rat> Y(Z.rbegin(), Z.rend());  // y_1 > y_2 > ... > y_n
    for (const Rat& y : Y) {
        auto it = Z.lower_bound(y);
        if (it == Z.begin()) continue;  // nothing strictly below y
        Rat z = *std::prev(it);
        for (const Rat& e : N1) {
            Z.insert(z - e);
            if (Z.size() > guard) throw RefinementTooLarge("shift refinement exceeds size guard");
        }
    }
    return {Z.begin(), Z.end()};
}

// D_B over P_Sh(X) of the inflated barcodes; equals the interleaving
// distance on the image of j(X, Sh(X)).
inline Rat shifted_distance(const std::vector<Rat>& X, const Barcode& B1, const Barcode& B2, const Rat& b) {
    WeightedPoset PX(X, b);
    WeightedPoset PS(shift_refinement(X), b);
    return bottleneck_distance(PS, inflate_module(PX, PS, B1), inflate_module(PX, PS, B2)).first;
}

// --- regularity ------------------------------------------------------------

// 1-based indices matching the usual subscript convention x_1 < ... < x_n.
struct IrregularityWitness {
    int i = 0;
    int l = 0;
    bool cond_c = false;  // Lambda_(x_l - x_i) moves x_{i-1}
};

struct RegularityReport {
    bool regular = true;
    std::optional<IrregularityWitness> witness;
};

namespace detail {

// Checks regularity at the (0-based) pair i < l; conditions referencing
// indices past the end hold vacuously.
inline bool regular_at_pair(const WeightedPoset& P, int i, int l) {
    int n = P.size();
    Rat gap = P.coord(i + 1) - P.coord(i);  // i+1 exists since i < l < n
    if (l + 2 >= n || P.coord(l + 2) - P.coord(l) > gap) return true;
    // condition (ii): x_{k+1} > x_{l+t} + x_l - x_i
    int t = 1;
    while (l + t + 1 < n && P.coord(l + t + 1) - P.coord(l) <= gap) ++t;
    Translation lam = maximal_translation(P, P.coord(l) - P.coord(i));
    PosetPoint xk = lam(PosetPoint::finite(l + 1));
    if (xk.is_inf() || xk.idx + 1 >= n) return true;
    return P.coord(xk.idx + 1) > P.coord(l + t) + P.coord(l) - P.coord(i);
}

}  // namespace detail

inline std::vector<IrregularityWitness> all_irregularity_witnesses(const std::vector<Rat>& X) {
    WeightedPoset P(X, WeightedPoset::default_b(X));
    std::vector<IrregularityWitness> out;
    for (int i = 0; i + 1 < P.size(); ++i)
        for (int l = i + 1; l < P.size(); ++l) {
            if (detail::regular_at_pair(P, i, l)) continue;
            Translation lam = maximal_translation(P, P.coord(l) - P.coord(i));
            bool c = i == 0 || lam(PosetPoint::finite(i - 1)) != PosetPoint::finite(i - 1);
            out.push_back({i + 1, l + 1, c});
        }
    return out;
}

inline RegularityReport is_regular(const std::vector<Rat>& X) {
    auto w = all_irregularity_witnesses(X);
    if (w.empty()) return {true, std::nullopt};
    return {false, w.front()};
}

// The interleaving of the irregularity proposition whose induced matching
// has strictly larger height.
struct Counterexample {
    Interval A, C, D;
    Rat eps;
    Translation lam;
    Rep repA, repCD;
    RepMorphism phi;  // Phi_{A, D.Lambda}
    RepMorphism psi;  // Phi_{D, A.Lambda}
};

inline Counterexample counterexample_from_irregularity(const std::vector<Rat>& X,
                                                       const IrregularityWitness& w, uint32_t p = 2) {
    WeightedPoset P(X, WeightedPoset::default_b(X));
    int i = w.i - 1, l = w.l - 1;
    int n = P.size();
    if (i < 0 || l <= i || l >= n) throw InvalidWitness("witness indices out of range");
    if (detail::regular_at_pair(P, i, l)) throw InvalidWitness("poset is regular at the witness pair");
    if (!w.cond_c) throw InvalidWitness("witness fails the technical condition (c)");
    Counterexample cx;
    cx.eps = P.coord(l) - P.coord(i);
    cx.lam = maximal_translation(P, cx.eps);
    if (i > 0 && cx.lam(PosetPoint::finite(i - 1)) == PosetPoint::finite(i - 1))
        throw InvalidWitness("witness fails the technical condition (c)");
    Rat gap = P.coord(i + 1) - P.coord(i);
    int t = 1;
    while (l + t + 1 < n && P.coord(l + t + 1) - P.coord(l) <= gap) ++t;
    PosetPoint top = cx.lam(PosetPoint::finite(l + 1));
    if (top.is_inf()) throw InvalidWitness("Lambda sends x_{l+1} to the suspension point");
    int tp = -1;
    for (int c = 1; c < t; ++c)
        if (cx.lam(PosetPoint::finite(l + c)) == top) tp = c;
    if (tp < 0) throw InvalidWitness("no valid t' below t");
    cx.A = Interval{i, top.idx};
    cx.C = Interval{i, l};
    cx.D = Interval{l, l + tp};
    cx.repA = rep_from_expanded(P, {cx.A}, p);
    cx.repCD = rep_from_expanded(P, {cx.C, cx.D}, p);
    cx.phi = generator_morphism(P, {cx.A}, {cx.C, cx.D}, cx.lam, 0, 1, p);
    cx.psi = generator_morphism(P, {cx.C, cx.D}, {cx.A}, cx.lam, 1, 0, p);
    return cx;
}

// --- classical bottleneck and the limit experiment -------------------------

// Classical bottleneck over half-open finite bars: matched cost
// min{max{(R-r)/2, (S-s)/2}, max{|r-s|, |R-S|}}, unmatched cost (R-r)/2.
inline Rat classical_distance(const ContinuousBarcode& B1, const ContinuousBarcode& B2) {
    std::vector<ContinuousBar> e1, e2;
    auto expand = [](const ContinuousBarcode& B, std::vector<ContinuousBar>& out) {
        for (const auto& bar : B) {
            check_continuous_bar(bar);
            if (!bar.death) throw InfiniteBar("classical_distance needs finite bars");
            for (int k = 0; k < bar.mult; ++k) out.push_back({bar.r, bar.death, 1});
        }
    };
    expand(B1, e1);
    expand(B2, e2);
    auto w = [](const ContinuousBar& s) -> Rat { return Rat(*s.death - s.r) / 2; };
    std::vector<Rat> wL, wR;
    for (auto& s : e1) wL.push_back(w(s));
    for (auto& s : e2) wR.push_back(w(s));
    std::vector<std::vector<Rat>> cost(e1.size(), std::vector<Rat>(e2.size()));
    for (std::size_t a = 0; a < e1.size(); ++a)
        for (std::size_t b = 0; b < e2.size(); ++b) {
            Rat diag = std::max(wL[a], wR[b]);
            Rat move = std::max(rat_abs(e1[a].r - e2[b].r), rat_abs(*e1[a].death - *e2[b].death));
            cost[a][b] = std::min(diag, move);
        }
    return detail::bottleneck_solve(cost, wL, wR).first;
}

struct LimitRow {
    int step = 0;
    int size = 0;
    Rat mesh_value;
    Rat lower;    // shifted distance of the restrictions
    Rat upper;    // bottleneck distance over P_X of the restrictions
    Rat classical;
};

// Theorem-2 sandwich: restriction to each step of the schedule, bounded
// below by the shifted distance and above by the discrete bottleneck, both
// converging to the classical distance as the mesh shrinks.
inline std::vector<LimitRow> limit_experiment(const ContinuousBarcode& B1, const ContinuousBarcode& B2,
                                              const RefinementSchedule& schedule, const Rat& b) {
    auto require_endpoint = [&](const Rat& v) {
        if (std::find(schedule.base.begin(), schedule.base.end(), v) == schedule.base.end())
            throw EndpointNotInL("bar endpoint missing from the schedule base");
    };
    for (const auto* B : {&B1, &B2})
        for (const auto& bar : *B) {
            check_continuous_bar(bar);
            require_endpoint(bar.r);
            if (bar.death) require_endpoint(*bar.death);
        }
    Rat classical = classical_distance(B1, B2);
    std::vector<LimitRow> rows;
    for (std::size_t s = 0; s < schedule.steps.size(); ++s) {
        const auto& coords = schedule.steps[s];
        for (const Rat& v : schedule.base)
            if (std::find(coords.begin(), coords.end(), v) == coords.end())
                throw ValidationError("schedule step does not contain the base set");
        WeightedPoset PX(coords, b);
        Barcode d1 = restrict_delta(PX, B1), d2 = restrict_delta(PX, B2);
        LimitRow row;
        row.step = static_cast<int>(s);
        row.size = static_cast<int>(coords.size());
        row.mesh_value = mesh(coords);
        row.lower = shifted_distance(coords, d1, d2, b);
        row.upper = bottleneck_distance(PX, d1, d2).first;
        row.classical = classical;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace pmod
