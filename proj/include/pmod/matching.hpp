#pragma once

#include <utility>
#include <vector>

#include "rep.hpp"

namespace pmod {

// A partial bijection between two expanded barcodes. Indices refer to
// expand_barcode of each side; every index appears exactly once across
// pairs and the unmatched lists.
struct MatchingRecord {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> unmatched1, unmatched2;
};

inline void check_matching(const MatchingRecord& m, std::size_t n1, std::size_t n2) {
    std::vector<int> seen1(n1, 0), seen2(n2, 0);
    auto mark = [](std::vector<int>& seen, int i) {
        if (i < 0 || i >= static_cast<int>(seen.size()) || seen[i]++) throw ValidationError("matching is not a partial bijection");
    };
    for (auto& [a, b] : m.pairs) {
        mark(seen1, a);
        mark(seen2, b);
    }
    for (int a : m.unmatched1) mark(seen1, a);
    for (int b : m.unmatched2) mark(seen2, b);
    for (int v : seen1)
        if (!v) throw ValidationError("matching does not cover the left barcode");
    for (int v : seen2)
        if (!v) throw ValidationError("matching does not cover the right barcode");
}

// Least eps for which m is an eps-matching: matched pairs move at most
// D(s,t), unmatched bars must have width <= eps.
inline Rat matching_height(const WeightedPoset& P, const MatchingRecord& m, const Barcode& B1, const Barcode& B2) {
    std::vector<Interval> e1 = expand_barcode(B1), e2 = expand_barcode(B2);
    check_matching(m, e1.size(), e2.size());
    Rat h = 0;
    for (auto& [a, b] : m.pairs) h = std::max(h, pairwise_distance(P, e1[a], e2[b]));
    for (int a : m.unmatched1) h = std::max(h, width(P, e1[a]));
    for (int b : m.unmatched2) h = std::max(h, width(P, e2[b]));
    return h;
}

inline bool is_eps_matching(const WeightedPoset& P, const MatchingRecord& m, const Barcode& B1,
                            const Barcode& B2, const Rat& eps) {
    return matching_height(P, m, B1, B2) <= eps;
}

namespace detail {

// Feasibility of an eps-matching given the pair costs and the widths:
// perfect matching on the graph augmented with one dummy per bar (a bar
// may pair with its dummy only when its width is within eps; dummies pair
// with dummies freely). Kuhn's augmenting paths.
inline std::optional<MatchingRecord> eps_matching(const std::vector<std::vector<Rat>>& cost,
                                                  const std::vector<Rat>& wL, const std::vector<Rat>& wR,
                                                  const Rat& eps) {
    int n1 = static_cast<int>(wL.size()), n2 = static_cast<int>(wR.size());
    int L = n1 + n2, R = n2 + n1;  // left: bars of B1 then dummies of B2; right: bars of B2 then dummies of B1
    std::vector<std::vector<int>> adj(L);
    for (int s = 0; s < n1; ++s) {
        for (int t = 0; t < n2; ++t)
            if (cost[s][t] <= eps) adj[s].push_back(t);
        if (wL[s] <= eps) adj[s].push_back(n2 + s);
    }
    for (int t = 0; t < n2; ++t) {
        int u = n1 + t;
        if (wR[t] <= eps) adj[u].push_back(t);
        for (int s = 0; s < n1; ++s) adj[u].push_back(n2 + s);
    }
    std::vector<int> matchR(R, -1);
    std::vector<char> used;
    auto aug = [&](auto&& self, int u) -> bool {
        for (int v : adj[u]) {
            if (used[v]) continue;
            used[v] = 1;
            if (matchR[v] < 0 || self(self, matchR[v])) {
                matchR[v] = u;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int u = 0; u < L; ++u) {
        used.assign(R, 0);
        if (aug(aug, u)) ++size;
    }
    if (size < L) return std::nullopt;
    MatchingRecord m;
    for (int t = 0; t < n2; ++t) {
        if (matchR[t] < n1)
            m.pairs.emplace_back(matchR[t], t);
        else
            m.unmatched2.push_back(t);
    }
    for (int s = 0; s < n1; ++s)
        if (matchR[n2 + s] == s) m.unmatched1.push_back(s);
    return m;
}

inline std::pair<Rat, MatchingRecord> bottleneck_solve(const std::vector<std::vector<Rat>>& cost,
                                                       const std::vector<Rat>& wL, const std::vector<Rat>& wR) {
    std::vector<Rat> cand;
    cand.push_back(0);
    for (const auto& row : cost)
        for (const auto& c : row) cand.push_back(c);
    cand.insert(cand.end(), wL.begin(), wL.end());
    cand.insert(cand.end(), wR.begin(), wR.end());
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (const Rat& eps : cand)
        if (auto m = eps_matching(cost, wL, wR, eps)) return {eps, *m};
    throw ValidationError("bottleneck search exhausted candidates");  // unreachable: the largest candidate always works
}

}  // namespace detail

inline std::pair<Rat, MatchingRecord> bottleneck_distance(const WeightedPoset& P, const Barcode& B1,
                                                          const Barcode& B2) {
    std::vector<Interval> e1 = expand_barcode(B1), e2 = expand_barcode(B2);
    std::vector<Rat> wL, wR;
    for (auto& iv : e1) wL.push_back(width(P, iv));
    for (auto& iv : e2) wR.push_back(width(P, iv));
    std::vector<std::vector<Rat>> cost(e1.size(), std::vector<Rat>(e2.size()));
    for (std::size_t s = 0; s < e1.size(); ++s)
        for (std::size_t t = 0; t < e2.size(); ++t) cost[s][t] = pairwise_distance(P, e1[s], e2[t]);
    return detail::bottleneck_solve(cost, wL, wR);
}

// --- induced matchings -----------------------------------------------------

// Bars sharing one endpoint, in reverse-inclusion order; provenance (index
// into the expanded barcode) breaks ties between isomorphic bars.
struct EnumeratedGroup {
    bool lower_key = true;
    int key = 0;                                      // the shared endpoint (index into P)
    std::vector<std::pair<Interval, int>> members;    // (bar, provenance)
};

inline EnumeratedGroup enumerate_lower(const WeightedPoset& P, const Barcode& B, int x) {
    EnumeratedGroup g{true, x, {}};
    std::vector<Interval> e = expand_barcode(B);
    for (std::size_t i = 0; i < e.size(); ++i) {
        check_interval(P, e[i]);
        if (e[i].lo == x) g.members.emplace_back(e[i], static_cast<int>(i));
    }
    std::stable_sort(g.members.begin(), g.members.end(),
                     [](const auto& a, const auto& b) { return a.first.hi > b.first.hi; });
    return g;
}

inline EnumeratedGroup enumerate_upper(const WeightedPoset& P, const Barcode& B, int y) {
    EnumeratedGroup g{false, y, {}};
    std::vector<Interval> e = expand_barcode(B);
    for (std::size_t i = 0; i < e.size(); ++i) {
        check_interval(P, e[i]);
        if (e[i].hi == y) g.members.emplace_back(e[i], static_cast<int>(i));
    }
    std::stable_sort(g.members.begin(), g.members.end(),
                     [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
    return g;
}

// Canonical injections grouped by lower endpoints: for a surjection onto a
// module with barcode B_image, the k-th image bar in each group pairs with
// the k-th source bar.
inline MatchingRecord induced_matching_onto(const WeightedPoset& P, const Barcode& B_source,
                                            const Barcode& B_image) {
    std::vector<Interval> es = expand_barcode(B_source), ei = expand_barcode(B_image);
    std::vector<char> used_s(es.size(), 0), used_i(ei.size(), 0);
    MatchingRecord m;
    for (int x = 0; x < P.size(); ++x) {
        EnumeratedGroup gs = enumerate_lower(P, B_source, x), gi = enumerate_lower(P, B_image, x);
        if (gi.members.size() > gs.members.size())
            throw GroupSizeViolation("image group exceeds source group at a lower endpoint");
        for (std::size_t k = 0; k < gi.members.size(); ++k) {
            m.pairs.emplace_back(gs.members[k].second, gi.members[k].second);
            used_s[gs.members[k].second] = 1;
            used_i[gi.members[k].second] = 1;
        }
    }
    for (std::size_t i = 0; i < es.size(); ++i)
        if (!used_s[i]) m.unmatched1.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < ei.size(); ++i)
        if (!used_i[i]) m.unmatched2.push_back(static_cast<int>(i));
    return m;
}

// Dual: canonical injections grouped by upper endpoints, sub into target.
inline MatchingRecord induced_matching_into(const WeightedPoset& P, const Barcode& B_sub,
                                            const Barcode& B_target) {
    std::vector<Interval> es = expand_barcode(B_sub), et = expand_barcode(B_target);
    std::vector<char> used_s(es.size(), 0), used_t(et.size(), 0);
    MatchingRecord m;
    for (int y = 0; y < P.size(); ++y) {
        EnumeratedGroup gs = enumerate_upper(P, B_sub, y), gt = enumerate_upper(P, B_target, y);
        if (gs.members.size() > gt.members.size())
            throw GroupSizeViolation("sub group exceeds target group at an upper endpoint");
        for (std::size_t k = 0; k < gs.members.size(); ++k) {
            m.pairs.emplace_back(gs.members[k].second, gt.members[k].second);
            used_s[gs.members[k].second] = 1;
            used_t[gt.members[k].second] = 1;
        }
    }
    for (std::size_t i = 0; i < es.size(); ++i)
        if (!used_s[i]) m.unmatched1.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < et.size(); ++i)
        if (!used_t[i]) m.unmatched2.push_back(static_cast<int>(i));
    return m;
}

// The summand-wise action of Lambda on B_M with provenance: acted[k] is the
// k-th surviving bar and source_index[k] the expanded index it came from.
struct ShiftMap {
    std::vector<Interval> acted;
    std::vector<int> source_index;
};

inline ShiftMap barcode_shift_map(const WeightedPoset& P, const Barcode& B_M, const Translation& t) {
    ShiftMap sm;
    std::vector<Interval> e = expand_barcode(B_M);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (auto j = act(P, e[i], t)) {
            sm.acted.push_back(*j);
            sm.source_index.push_back(static_cast<int>(i));
        }
    return sm;
}

// The induced matching B(I) -> B(M) of an interleaving triangle: factor
// phi: I -> M.Lambda through its image, compose the canonical injections
// Theta(i) o Theta(q)^{-1}, then undo the Lambda shift by provenance.
inline MatchingRecord induced_matching_triangle(const WeightedPoset& P, const Rep& I, const Rep& M,
                                                const RepMorphism& phi, const RepMorphism& psi,
                                                const Translation& lam) {
    if (!is_interleaving(P, I, M, phi, psi, lam))
        throw ValidationError("induced_matching_triangle needs a genuine interleaving");
    Barcode BI = decompose(P, I), BM = decompose(P, M);
    Rep Ml = act_rep(P, M, lam);
    Barcode Bim = decompose(P, image(I, Ml, phi).rep);

    ShiftMap sm = barcode_shift_map(P, BM, lam);
    std::vector<Interval> eI = expand_barcode(BI), eM = expand_barcode(BM);

    // Theta(q): image bars -> I bars, by lower endpoint groups.
    MatchingRecord onto = induced_matching_onto(P, BI, Bim);
    // Theta(i): image bars -> M.Lambda bars, by upper endpoint groups over the raw acted list.
    std::vector<char> usedA(sm.acted.size(), 0);
    std::vector<int> im_to_acted(expand_barcode(Bim).size(), -1);
    std::vector<Interval> eim = expand_barcode(Bim);
    for (int y = 0; y < P.size(); ++y) {
        std::vector<std::pair<Interval, int>> gs, gt;
        for (std::size_t i = 0; i < eim.size(); ++i)
            if (eim[i].hi == y) gs.emplace_back(eim[i], static_cast<int>(i));
        for (std::size_t i = 0; i < sm.acted.size(); ++i)
            if (sm.acted[i].hi == y) gt.emplace_back(sm.acted[i], static_cast<int>(i));
        std::stable_sort(gs.begin(), gs.end(), [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
        std::stable_sort(gt.begin(), gt.end(), [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
        if (gs.size() > gt.size())
            throw GroupSizeViolation("image group exceeds M.Lambda group at an upper endpoint");
        for (std::size_t k = 0; k < gs.size(); ++k) {
            im_to_acted[gs[k].second] = gt[k].second;
            usedA[gt[k].second] = 1;
        }
    }

    MatchingRecord out;
    std::vector<char> usedI(eI.size(), 0), usedM(eM.size(), 0);
    for (auto& [iidx, imidx] : onto.pairs) {
        int aidx = im_to_acted[imidx];
        int midx = sm.source_index[aidx];
        out.pairs.emplace_back(iidx, midx);
        usedI[iidx] = 1;
        usedM[midx] = 1;
    }
    for (std::size_t i = 0; i < eI.size(); ++i)
        if (!usedI[i]) out.unmatched1.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < eM.size(); ++i)
        if (!usedM[i]) out.unmatched2.push_back(static_cast<int>(i));
    return out;
}

}  // namespace pmod
