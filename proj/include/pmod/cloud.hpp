#pragma once

#include <numeric>
#include <vector>

#include "refinement.hpp"

namespace pmod {

enum class Metric { L1, LInf, EuclideanSquared };

// Finite point set with exact coordinates. Euclidean distances are offered
// squared so every value stays rational; the filtration scale is then a
// monotone reparameterization of the usual one.
struct PointCloud {
    std::vector<std::vector<Rat>> points;
    Metric metric = Metric::LInf;
};

inline void check_cloud(const PointCloud& c) {
    if (c.points.empty()) throw ValidationError("point cloud must be nonempty");
    for (const auto& pt : c.points)
        if (pt.size() != c.points[0].size()) throw ValidationError("point cloud dimensions differ");
}

inline Rat cloud_distance(const PointCloud& c, std::size_t i, std::size_t j) {
    Rat acc = 0;
    for (std::size_t k = 0; k < c.points[i].size(); ++k) {
        Rat d = rat_abs(c.points[i][k] - c.points[j][k]);
        switch (c.metric) {
            case Metric::L1: acc += d; break;
            case Metric::LInf: acc = std::max(acc, d); break;
            case Metric::EuclideanSquared: acc += d * d; break;
        }
    }
    return acc;
}

using JumpSet = std::vector<Rat>;  // sorted, deduplicated, >= 0

// The scales at which the Vietoris-Rips complex changes: all pairwise
// distances over distinct indices.
inline JumpSet jump_discontinuities(const PointCloud& c) {
    check_cloud(c);
    JumpSet out;
    for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t j = i + 1; j < c.points.size(); ++j) out.push_back(cloud_distance(c, i, j));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline JumpSet union_jump_sets(const std::vector<JumpSet>& sets) {
    JumpSet out;
    for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Single-linkage H0 barcode: union-find over edges sorted by length, elder
// rule by least point index. One bar [0, merge) per dying component, one
// [0, inf) survivor; zero-length bars are dropped.
inline ContinuousBarcode h0_barcode(const PointCloud& c) {
    check_cloud(c);
    std::size_t n = c.points.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    struct Edge {
        Rat d;
        std::size_t i, j;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({cloud_distance(c, i, j), i, j});
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.d, a.i, a.j) < std::tie(b.d, b.i, b.j); });
    ContinuousBarcode out;
    for (const auto& e : edges) {
        int a = find(static_cast<int>(e.i)), b = find(static_cast<int>(e.j));
        if (a == b) continue;
        // roots track the least index of their component (merging keeps the smaller root)
        int young = std::max(a, b), old_root = std::min(a, b);
        parent[young] = old_root;
        if (e.d > 0) out.push_back({Rat(0), e.d, 1});
    }
    out.push_back({Rat(0), std::nullopt, 1});
    std::sort(out.begin(), out.end(), [](const ContinuousBar& x, const ContinuousBar& y) {
        if (x.death && y.death) return *x.death < *y.death;
        return x.death.has_value() > y.death.has_value();
    });
    return out;
}

}  // namespace pmod
