#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "poset.hpp"

namespace pmod {

// Support [x_lo, x_hi] of a convex module, as indices into P.points().
// The zero module is represented by an empty optional, never by an empty
// support, so the "zero or convex" dichotomy of the translation action is
// visible in the types.
struct Interval {
    int lo = 0;
    int hi = 0;
    auto operator<=>(const Interval&) const = default;
};

using MaybeInterval = std::optional<Interval>;

struct Bar {
    Interval iv;
    int mult = 1;
    auto operator<=>(const Bar&) const = default;
};

// Multiset of interval summands. Canonical form: sorted by (lo, hi), merged.
using Barcode = std::vector<Bar>;

inline void check_interval(const WeightedPoset& P, const Interval& I) {
    if (I.lo < 0 || I.hi >= P.size() || I.lo > I.hi) throw ValidationError("invalid interval");
}

inline Barcode canonical_barcode(Barcode b) {
    std::sort(b.begin(), b.end());
    Barcode out;
    for (auto& bar : b) {
        if (bar.mult < 1) throw ValidationError("bar multiplicity must be >= 1");
        if (!out.empty() && out.back().iv == bar.iv)
            out.back().mult += bar.mult;
        else
            out.push_back(bar);
    }
    return out;
}

// Expanded multiset view: one entry per copy, index = provenance.
inline std::vector<Interval> expand_barcode(const Barcode& b) {
    std::vector<Interval> out;
    for (const auto& bar : b)
        for (int k = 0; k < bar.mult; ++k) out.push_back(bar.iv);
    return out;
}

// Hom(I, J) for convex I ~ [x,X], J ~ [y,Y] is K iff y <= x <= Y <= X.
inline int hom_dim(const WeightedPoset& P, const Interval& I, const Interval& J) {
    check_interval(P, I);
    check_interval(P, J);
    return (J.lo <= I.lo && I.lo <= J.hi && J.hi <= I.hi) ? 1 : 0;
}

// The generator Phi_{I,J} of Hom(I,J): the linearization of the
// characteristic function of [lo(I), hi(J)].
struct GeneratorDescriptor {
    Interval source;
    Interval target;
    MaybeInterval carrier;  // empty iff Hom(source, target) = 0
};

inline GeneratorDescriptor generator_phi(const WeightedPoset& P, const Interval& I, const Interval& J) {
    GeneratorDescriptor g{I, J, std::nullopt};
    if (hom_dim(P, I, J) == 1) g.carrier = Interval{I.lo, J.hi};
    return g;
}

// Right action: support of I.Lambda is {p : Lambda p in supp(I)}.
inline MaybeInterval act(const WeightedPoset& P, const Interval& I, const Translation& t) {
    check_interval(P, I);
    int lo = -1, hi = -1;
    for (int p = 0; p < P.size(); ++p) {
        PosetPoint q = t(PosetPoint::finite(p));
        if (q.is_inf() || q.idx < I.lo || q.idx > I.hi) continue;
        if (lo < 0) lo = p;
        hi = p;
    }
    if (lo < 0) return std::nullopt;
    return Interval{lo, hi};
}

inline Barcode act_barcode(const WeightedPoset& P, const Barcode& b, const Translation& t) {
    Barcode out;
    for (const auto& bar : b)
        if (auto j = act(P, bar.iv, t)) out.push_back({*j, bar.mult});
    return canonical_barcode(out);
}

inline PosetPoint successor(const WeightedPoset& P, PosetPoint q) {
    if (q.is_inf()) throw ValidationError("successor of the suspension point");
    P.check(q);
    return q.idx + 1 < P.size() ? PosetPoint::finite(q.idx + 1) : PosetPoint::infinity();
}

// Hom(I, I Lambda^2) = 0 iff Lambda^2 pushes the lower endpoint off the support.
inline bool hom_killed_by(const WeightedPoset& P, const Interval& I, const Translation& t) {
    PosetPoint q = t(t(PosetPoint::finite(I.lo)));
    return q > PosetPoint::finite(I.hi);
}

// Width W(I) = W_3: least eps with Hom(I, I Lambda_eps^2) = 0.
inline Rat width(const WeightedPoset& P, const Interval& I) {
    check_interval(P, I);
    for (const Rat& eps : candidate_heights(P)) {
        if (hom_killed_by(P, I, maximal_translation(P, eps))) return eps;
    }
    throw ValidationError("width search exhausted candidate heights");  // unreachable
}

// W_2 computed from an explicit enumeration of T(P): least h(Lambda) over
// translations with Hom(I, I Lambda^2) = 0. Test oracle for Lemma-23 style
// width equivalence; pass the shared enumeration in.
inline Rat width_v2(const WeightedPoset& P, const Interval& I, const std::vector<Translation>& all,
                    const std::vector<Rat>& heights) {
    std::optional<Rat> best;
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (!hom_killed_by(P, I, all[k])) continue;
        const Rat& h = heights[k];
        if (!best || h < *best) best = h;
    }
    if (!best) throw ValidationError("width_v2: no translation kills the interval");
    return *best;
}

// W_1 over pairs (Lambda, Gamma): min over q of
// max(min height reaching q from lo, min height killing from q).
inline Rat width_v1(const WeightedPoset& P, const Interval& I, const std::vector<Translation>& all,
                    const std::vector<Rat>& heights) {
    const PosetPoint lo = PosetPoint::finite(I.lo);
    const PosetPoint top = PosetPoint::finite(I.hi);
    int n = P.size();
    auto slot = [&](PosetPoint q) { return q.is_inf() ? n : q.idx; };
    std::vector<std::optional<Rat>> reach(n + 1), kill(n + 1);
    for (std::size_t k = 0; k < all.size(); ++k) {
        const auto& t = all[k];
        const Rat& h = heights[k];
        int r = slot(t(lo));
        if (!reach[r] || h < *reach[r]) reach[r] = h;
        for (int q = 0; q <= n; ++q) {
            PosetPoint img = t(q == n ? PosetPoint::infinity() : PosetPoint::finite(q));
            if (img > top && (!kill[q] || h < *kill[q])) kill[q] = h;
        }
    }
    std::optional<Rat> best;
    for (int q = 0; q <= n; ++q) {
        if (!reach[q] || !kill[q]) continue;
        Rat c = std::max(*reach[q], *kill[q]);
        if (!best || c < *best) best = c;
    }
    if (!best) throw ValidationError("width_v1: no killing pair found");
    return *best;
}

// Closed-form interleaving distance between convex modules:
// D(I,M) = min{ max{W(I),W(M)}, max{ d(u,z), d(U^{+1},Z^{+1}) } }.
inline Rat pairwise_distance(const WeightedPoset& P, const Interval& I, const Interval& M) {
    check_interval(P, I);
    check_interval(P, M);
    Rat widths = std::max(width(P, I), width(P, M));
    Rat ends = std::max(P.d(PosetPoint::finite(I.lo), PosetPoint::finite(M.lo)),
                        P.d(successor(P, PosetPoint::finite(I.hi)), successor(P, PosetPoint::finite(M.hi))));
    return std::min(widths, ends);
}

// I^{-Lambda^2}: quotient support [lo, U0] with U0 maximal, Lambda^2 U0 <= hi.
inline MaybeInterval trim_quotient(const WeightedPoset& P, const Interval& I, const Translation& t) {
    check_interval(P, I);
    for (int u0 = I.hi; u0 >= I.lo; --u0) {
        PosetPoint q = t(t(PosetPoint::finite(u0)));
        if (q <= PosetPoint::finite(I.hi)) return Interval{I.lo, u0};
    }
    return std::nullopt;
}

// M^{+Lambda^2} Lambda: the submodule of M generated at Lambda^2(lo), then
// acted on by Lambda. Its lower endpoint is the minimal v0 with
// Lambda v0 >= Lambda^2(lo); its upper endpoint agrees with M Lambda.
inline MaybeInterval trim_submodule(const WeightedPoset& P, const Interval& M, const Translation& t) {
    check_interval(P, M);
    PosetPoint target = t(t(PosetPoint::finite(M.lo)));
    if (target > PosetPoint::finite(M.hi)) return std::nullopt;
    return act(P, Interval{target.idx, M.hi}, t);
}

}  // namespace pmod
