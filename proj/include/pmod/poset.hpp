#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace pmod {

// A point of the suspended poset P^+ = {x_0 < ... < x_{n-1} < inf}.
// Finite points are indices into WeightedPoset::points(); the suspension
// point is an explicit value so translations can store Lambda(inf) = inf.
struct PosetPoint {
    int idx = 0;
    static constexpr int kInf = std::numeric_limits<int>::max();

    static constexpr PosetPoint infinity() { return PosetPoint{kInf}; }
    static constexpr PosetPoint finite(int i) { return PosetPoint{i}; }
    constexpr bool is_inf() const { return idx == kInf; }
    auto operator<=>(const PosetPoint&) const = default;
};

// A finite totally ordered set of exact real coordinates together with the
// weight b of the edge from max(X) to the suspension point. The weighted
// Hasse metric on the chain collapses to coordinate distance for finite
// points and to (max(X) - x) + b against the suspension point.
class WeightedPoset {
  public:
    WeightedPoset(std::vector<Rat> points, Rat b) : pts_(std::move(points)), b_(std::move(b)) {
        if (pts_.empty()) throw ValidationError("poset needs at least one point");
        if (b_ <= 0) throw ValidationError("suspension weight b must be positive");
        for (std::size_t i = 1; i < pts_.size(); ++i)
            if (!(pts_[i - 1] < pts_[i])) throw ValidationError("poset points must be strictly increasing");
    }

    // Large enough that the suspension edge never competes with finite gaps.
    static Rat default_b(const std::vector<Rat>& points) {
        if (points.empty()) return 1;
        return 2 * (points.back() - points.front()) + 1;
    }

    int size() const { return static_cast<int>(pts_.size()); }
    const std::vector<Rat>& points() const { return pts_; }
    const Rat& coord(int i) const { return pts_.at(i); }
    const Rat& b() const { return b_; }
    const Rat& max_coord() const { return pts_.back(); }

    bool contains(PosetPoint p) const { return p.is_inf() || (p.idx >= 0 && p.idx < size()); }

    // Index of an exact coordinate, if it is a point of X.
    std::optional<int> index_of(const Rat& x) const {
        auto it = std::lower_bound(pts_.begin(), pts_.end(), x);
        if (it == pts_.end() || *it != x) return std::nullopt;
        return static_cast<int>(it - pts_.begin());
    }

    Rat d(PosetPoint p, PosetPoint q) const {
        check(p);
        check(q);
        if (p.is_inf() && q.is_inf()) return 0;
        if (p.is_inf()) std::swap(p, q);
        if (q.is_inf()) return (pts_.back() - pts_[p.idx]) + b_;
        return rat_abs(pts_[q.idx] - pts_[p.idx]);
    }

    void check(PosetPoint p) const {
        if (!contains(p)) throw ValidationError("poset point out of range");
    }

    bool operator==(const WeightedPoset& o) const { return pts_ == o.pts_ && b_ == o.b_; }

  private:
    std::vector<Rat> pts_;
    Rat b_;
};

// A monotone inflationary self-map of P^+ fixing the suspension point.
// img[i] is the image of the i-th finite point; img[n] is the image of inf.
struct Translation {
    std::vector<PosetPoint> img;

    PosetPoint operator()(PosetPoint p) const {
        if (p.is_inf()) return img.back();
        return img.at(p.idx);
    }
};

inline Translation identity_translation(const WeightedPoset& P) {
    Translation t;
    t.img.reserve(P.size() + 1);
    for (int i = 0; i < P.size(); ++i) t.img.push_back(PosetPoint::finite(i));
    t.img.push_back(PosetPoint::infinity());
    return t;
}

inline bool is_valid_translation(const WeightedPoset& P, const Translation& t) {
    if (static_cast<int>(t.img.size()) != P.size() + 1) return false;
    if (!t.img.back().is_inf()) return false;
    for (int i = 0; i < P.size(); ++i) {
        if (!P.contains(t.img[i])) return false;
        if (t.img[i] < PosetPoint::finite(i)) return false;       // inflationary
        if (i > 0 && t.img[i] < t.img[i - 1]) return false;       // monotone
    }
    return true;
}

inline void check_translation(const WeightedPoset& P, const Translation& t) {
    if (!is_valid_translation(P, t)) throw ValidationError("invalid translation");
}

inline Rat height(const WeightedPoset& P, const Translation& t) {
    Rat h = 0;
    for (int i = 0; i < P.size(); ++i) h = std::max(h, P.d(PosetPoint::finite(i), t.img[i]));
    return h;
}

// The unique maximal translation of height <= eps: each point moves to the
// farthest point (possibly inf) within distance eps.
inline Translation maximal_translation(const WeightedPoset& P, const Rat& eps) {
    if (eps < 0) throw ValidationError("maximal_translation needs eps >= 0");
    Translation t;
    t.img.reserve(P.size() + 1);
    int n = P.size();
    for (int i = 0; i < n; ++i) {
        if ((P.max_coord() - P.coord(i)) + P.b() <= eps) {
            t.img.push_back(PosetPoint::infinity());
            continue;
        }
        int j = i;
        while (j + 1 < n && P.coord(j + 1) - P.coord(i) <= eps) ++j;
        t.img.push_back(PosetPoint::finite(j));
    }
    t.img.push_back(PosetPoint::infinity());
    return t;
}

// (compose(a, b))(p) = a(b(p)), matching the right action (F.G)(p) = F(Gp).
inline Translation compose(const Translation& a, const Translation& b) {
    Translation t;
    t.img.reserve(b.img.size());
    for (const auto& q : b.img) t.img.push_back(a(q));
    return t;
}

inline bool leq_translation(const Translation& a, const Translation& b) {
    if (a.img.size() != b.img.size()) throw ValidationError("translations on different posets");
    for (std::size_t i = 0; i < a.img.size(); ++i)
        if (b.img[i] < a.img[i]) return false;
    return true;
}

// All pairwise distances {d(p,q) : p <= q in P^+}, sorted ascending.
// Every height of a maximal translation lies in this set, so minimizations
// over heights scan it in order.
inline std::vector<Rat> candidate_heights(const WeightedPoset& P) {
    std::vector<Rat> out;
    out.push_back(0);
    int n = P.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) out.push_back(P.coord(j) - P.coord(i));
        out.push_back((P.max_coord() - P.coord(i)) + P.b());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Exhaustive enumeration of T(P). Catalan growth; meant for small posets
// where it backs the width and domination oracles.
inline std::vector<Translation> enumerate_all_translations(const WeightedPoset& P) {
    int n = P.size();
    std::vector<Translation> out;
    Translation cur;
    cur.img.assign(n + 1, PosetPoint::infinity());
    auto rec = [&](auto&& self, int i, PosetPoint lower) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        PosetPoint from = std::max(lower, PosetPoint::finite(i));
        for (int j = from.idx; j < n; ++j) {
            cur.img[i] = PosetPoint::finite(j);
            self(self, i + 1, PosetPoint::finite(j));
        }
        cur.img[i] = PosetPoint::infinity();
        self(self, i + 1, PosetPoint::infinity());
    };
    rec(rec, 0, PosetPoint::finite(0));
    return out;
}

}  // namespace pmod
