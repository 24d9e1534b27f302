#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "fp_matrix.hpp"
#include "interval.hpp"

namespace pmod {

// A representation of the equioriented A_n quiver attached to P (finite
// vertices only; every module is supported in P, never at the suspension
// point). maps[i] sends vertex i to vertex i+1.
struct Rep {
    uint32_t p = 2;
    std::vector<int> dims;
    std::vector<FpMat> maps;
};

struct RepMorphism {
    std::vector<FpMat> phi;  // one matrix per vertex: src.dims[v] -> dst.dims[v]
};

inline void check_rep(const WeightedPoset& P, const Rep& R) {
    if (static_cast<int>(R.dims.size()) != P.size()) throw ValidationError("rep/poset size mismatch");
    if (R.maps.size() + 1 != R.dims.size()) throw ValidationError("rep arrow count mismatch");
    for (std::size_t i = 0; i < R.maps.size(); ++i) {
        if (R.maps[i].rows() != R.dims[i + 1] || R.maps[i].cols() != R.dims[i] || R.maps[i].prime() != R.p)
            throw ValidationError("rep arrow shape mismatch");
    }
}

inline void check_morphism(const Rep& src, const Rep& dst, const RepMorphism& f) {
    if (f.phi.size() != src.dims.size() || src.dims.size() != dst.dims.size())
        throw ValidationError("morphism vertex count mismatch");
    for (std::size_t v = 0; v < f.phi.size(); ++v)
        if (f.phi[v].rows() != dst.dims[v] || f.phi[v].cols() != src.dims[v] || f.phi[v].prime() != src.p)
            throw ValidationError("morphism shape mismatch");
}

inline bool morphism_commutes(const Rep& src, const Rep& dst, const RepMorphism& f) {
    check_morphism(src, dst, f);
    for (std::size_t v = 0; v + 1 < f.phi.size(); ++v)
        if (dst.maps[v] * f.phi[v] != f.phi[v + 1] * src.maps[v]) return false;
    return true;
}

inline RepMorphism zero_morphism(const Rep& src, const Rep& dst) {
    RepMorphism f;
    for (std::size_t v = 0; v < src.dims.size(); ++v)
        f.phi.emplace_back(dst.dims[v], src.dims[v], src.p);
    return f;
}

inline RepMorphism identity_morphism(const Rep& R) {
    RepMorphism f;
    for (int d : R.dims) f.phi.push_back(FpMat::identity(d, R.p));
    return f;
}

// g after f, vertex-wise.
inline RepMorphism compose_morphisms(const RepMorphism& g, const RepMorphism& f) {
    RepMorphism out;
    for (std::size_t v = 0; v < f.phi.size(); ++v) out.phi.push_back(g.phi[v] * f.phi[v]);
    return out;
}

inline RepMorphism add_morphisms(const RepMorphism& a, const RepMorphism& b) {
    RepMorphism out;
    for (std::size_t v = 0; v < a.phi.size(); ++v) out.phi.push_back(a.phi[v] + b.phi[v]);
    return out;
}

inline RepMorphism scale_morphism(const RepMorphism& f, uint32_t c) {
    RepMorphism out;
    for (const auto& m : f.phi) out.phi.push_back(m.scaled(c));
    return out;
}

inline bool morphism_equal(const RepMorphism& a, const RepMorphism& b) { return a.phi == b.phi; }

// Internal map of R from vertex i to vertex j (composite of the arrows).
inline FpMat composite_map(const Rep& R, int i, int j) {
    FpMat m = FpMat::identity(R.dims[i], R.p);
    for (int v = i; v < j; ++v) m = R.maps[v] * m;
    return m;
}

// --- barcode <-> representation ------------------------------------------

// Block-diagonal representation of an expanded bar list: one K-chain with
// identity internal maps per bar, blocks ordered as given.
inline Rep rep_from_expanded(const WeightedPoset& P, const std::vector<Interval>& bars, uint32_t p = 2) {
    int n = P.size();
    Rep R;
    R.p = p;
    R.dims.assign(n, 0);
    for (const auto& iv : bars) {
        check_interval(P, iv);
        for (int v = iv.lo; v <= iv.hi; ++v) ++R.dims[v];
    }
    for (int v = 0; v + 1 < n; ++v) R.maps.emplace_back(R.dims[v + 1], R.dims[v], p);
    // offsets walk the bar list in order at each pair of adjacent vertices
    for (int v = 0; v + 1 < n; ++v) {
        int at = 0, nxt = 0;
        for (const auto& iv : bars) {
            bool here = iv.lo <= v && v <= iv.hi;
            bool there = iv.lo <= v + 1 && v + 1 <= iv.hi;
            if (here && there) R.maps[v](nxt, at) = 1;
            at += here ? 1 : 0;
            nxt += there ? 1 : 0;
        }
    }
    return R;
}

inline Rep rep_from_barcode(const WeightedPoset& P, const Barcode& B, uint32_t p = 2) {
    return rep_from_expanded(P, expand_barcode(B), p);
}

// Dimension offset of block `bar` at vertex v inside rep_from_expanded(bars).
inline int block_offset(const std::vector<Interval>& bars, int bar, int v) {
    int off = 0;
    for (int t = 0; t < bar; ++t)
        if (bars[t].lo <= v && v <= bars[t].hi) ++off;
    return off;
}

// Krull-Schmidt decomposition via the rank function of the internal maps:
// mult[i,j] = rk(i,j) - rk(i-1,j) - rk(i,j+1) + rk(i-1,j+1).
inline Barcode decompose(const WeightedPoset& P, const Rep& R) {
    check_rep(P, R);
    int n = P.size();
    std::vector<std::vector<int>> rk(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        FpMat cur = FpMat::identity(R.dims[i], R.p);
        rk[i][i] = R.dims[i];
        for (int j = i + 1; j < n; ++j) {
            cur = R.maps[j - 1] * cur;
            rk[i][j] = cur.rank();
        }
    }
    auto rk_at = [&](int i, int j) { return (i < 0 || j >= n) ? 0 : rk[i][j]; };
    Barcode out;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int m = rk_at(i, j) - rk_at(i - 1, j) - rk_at(i, j + 1) + rk_at(i - 1, j + 1);
            if (m < 0) throw ValidationError("negative multiplicity: rep is not a valid A_n module");
            if (m > 0) out.push_back({Interval{i, j}, m});
        }
    return canonical_barcode(out);
}

// --- kernels, images, cokernels ------------------------------------------

struct SubquotientRep {
    Rep rep;
    RepMorphism map;  // inclusion into source/target, or projection from target
};

inline SubquotientRep kernel(const Rep& src, const Rep& dst, const RepMorphism& f) {
    check_morphism(src, dst, f);
    SubquotientRep out;
    out.rep.p = src.p;
    std::vector<FpMat> basis;
    for (std::size_t v = 0; v < f.phi.size(); ++v) {
        basis.push_back(f.phi[v].nullspace_basis());
        out.rep.dims.push_back(basis.back().cols());
        out.map.phi.push_back(basis.back());
    }
    for (std::size_t v = 0; v + 1 < f.phi.size(); ++v) {
        auto k = basis[v + 1].solve(src.maps[v] * basis[v]);
        if (!k) throw ValidationError("kernel is not arrow-stable: morphism does not commute");
        out.rep.maps.push_back(*k);
    }
    return out;
}

inline SubquotientRep image(const Rep& src, const Rep& dst, const RepMorphism& f) {
    check_morphism(src, dst, f);
    SubquotientRep out;
    out.rep.p = src.p;
    std::vector<FpMat> basis;
    for (std::size_t v = 0; v < f.phi.size(); ++v) {
        basis.push_back(f.phi[v].colspace_basis());
        out.rep.dims.push_back(basis.back().cols());
        out.map.phi.push_back(basis.back());
    }
    for (std::size_t v = 0; v + 1 < f.phi.size(); ++v) {
        auto m = basis[v + 1].solve(dst.maps[v] * basis[v]);
        if (!m) throw ValidationError("image is not arrow-stable: morphism does not commute");
        out.rep.maps.push_back(*m);
    }
    return out;
}

inline SubquotientRep cokernel(const Rep& src, const Rep& dst, const RepMorphism& f) {
    check_morphism(src, dst, f);
    SubquotientRep out;
    out.rep.p = src.p;
    std::vector<FpMat> proj, sect;
    for (std::size_t v = 0; v < f.phi.size(); ++v) {
        FpMat C = f.phi[v].colspace_basis();
        int t = dst.dims[v], r = C.cols();
        // complete im(f) to a basis of the fiber, then project onto the tail
        FpMat B = C.hstack(FpMat::identity(t, dst.p)).colspace_basis();
        auto Binv = B.inverse();
        if (!Binv) throw ValidationError("cokernel basis completion failed");
        FpMat pi(t - r, t, dst.p), rho(t, t - r, dst.p);
        for (int i = 0; i < t - r; ++i)
            for (int j = 0; j < t; ++j) {
                pi(i, j) = (*Binv)(r + i, j);
                rho(j, i) = B(j, r + i);
            }
        proj.push_back(pi);
        sect.push_back(rho);
        out.rep.dims.push_back(t - r);
        out.map.phi.push_back(pi);
    }
    for (std::size_t v = 0; v + 1 < f.phi.size(); ++v)
        out.rep.maps.push_back(proj[v + 1] * dst.maps[v] * sect[v]);
    return out;
}

// --- translation action ---------------------------------------------------

inline Rep act_rep(const WeightedPoset& P, const Rep& R, const Translation& t) {
    check_rep(P, R);
    Rep out;
    out.p = R.p;
    int n = P.size();
    auto dim_at = [&](int v) {
        PosetPoint q = t(PosetPoint::finite(v));
        return q.is_inf() ? 0 : R.dims[q.idx];
    };
    for (int v = 0; v < n; ++v) out.dims.push_back(dim_at(v));
    for (int v = 0; v + 1 < n; ++v) {
        PosetPoint a = t(PosetPoint::finite(v)), b = t(PosetPoint::finite(v + 1));
        if (a.is_inf() || b.is_inf())
            out.maps.emplace_back(out.dims[v + 1], out.dims[v], R.p);
        else
            out.maps.push_back(composite_map(R, a.idx, b.idx));
    }
    return out;
}

// f.Lambda between the acted representations: vertex v carries f at Lambda v.
inline RepMorphism act_morphism(const WeightedPoset& P, const RepMorphism& f, const Translation& t,
                                const Rep& src, const Rep& dst) {
    check_morphism(src, dst, f);
    RepMorphism out;
    for (int v = 0; v < P.size(); ++v) {
        PosetPoint q = t(PosetPoint::finite(v));
        out.phi.push_back(q.is_inf() ? FpMat(0, 0, src.p) : f.phi[q.idx]);
    }
    return out;
}

// Canonical morphism R -> R.(Lambda Gamma) given vertex-wise by the internal
// maps R(v <= Lambda(Gamma v)).
inline RepMorphism internal_map(const WeightedPoset& P, const Rep& R, const Translation& lam,
                                const Translation& gam) {
    check_rep(P, R);
    RepMorphism out;
    for (int v = 0; v < P.size(); ++v) {
        PosetPoint q = lam(gam(PosetPoint::finite(v)));
        if (q.is_inf())
            out.phi.emplace_back(0, R.dims[v], R.p);
        else
            out.phi.push_back(composite_map(R, v, q.idx));
    }
    return out;
}

// phi: I -> M.Lambda and psi: M -> I.Lambda form a (Lambda,Lambda)-
// interleaving iff both triangles compose to the internal maps.
inline bool is_interleaving(const WeightedPoset& P, const Rep& I, const Rep& M, const RepMorphism& phi,
                            const RepMorphism& psi, const Translation& lam) {
    Rep Ml = act_rep(P, M, lam), Il = act_rep(P, I, lam);
    check_morphism(I, Ml, phi);
    check_morphism(M, Il, psi);
    RepMorphism psi_l = act_morphism(P, psi, lam, M, Il);
    RepMorphism phi_l = act_morphism(P, phi, lam, I, Ml);
    return morphism_equal(compose_morphisms(psi_l, phi), internal_map(P, I, lam, lam)) &&
           morphism_equal(compose_morphisms(phi_l, psi), internal_map(P, M, lam, lam));
}

// Full-rep realization of the generator Phi_{src_bars[s], tgt_bars[t].Lambda}
// from rep(src_bars) to rep(tgt_bars).Lambda; zero when Hom vanishes.
inline RepMorphism generator_morphism(const WeightedPoset& P, const std::vector<Interval>& src_bars,
                                      const std::vector<Interval>& tgt_bars, const Translation& lam, int s,
                                      int t, uint32_t p = 2) {
    Rep S = rep_from_expanded(P, src_bars, p);
    Rep T = act_rep(P, rep_from_expanded(P, tgt_bars, p), lam);
    RepMorphism f = zero_morphism(S, T);
    MaybeInterval tl = act(P, tgt_bars[t], lam);
    if (!tl || hom_dim(P, src_bars[s], *tl) == 0) return f;
    for (int v = src_bars[s].lo; v <= tl->hi; ++v) {
        PosetPoint q = lam(PosetPoint::finite(v));
        int row = block_offset(tgt_bars, t, q.idx);
        int col = block_offset(src_bars, s, v);
        f.phi[v](row, col) = 1;
    }
    return f;
}

// --- brute-force interleaving oracle --------------------------------------

inline constexpr uint64_t kDefaultBruteCap = uint64_t(1) << 24;

namespace detail {

struct HomBasis {
    std::vector<RepMorphism> gens;
    Rep src, dst;  // block-diagonal reps the generators act between
};

inline HomBasis hom_basis(const WeightedPoset& P, const std::vector<Interval>& src_bars,
                          const std::vector<Interval>& tgt_bars, const Translation& lam, uint32_t p) {
    HomBasis out;
    out.src = rep_from_expanded(P, src_bars, p);
    out.dst = act_rep(P, rep_from_expanded(P, tgt_bars, p), lam);
    for (std::size_t s = 0; s < src_bars.size(); ++s)
        for (std::size_t t = 0; t < tgt_bars.size(); ++t) {
            MaybeInterval tl = act(P, tgt_bars[t], lam);
            if (!tl || hom_dim(P, src_bars[s], *tl) == 0) continue;
            out.gens.push_back(
                generator_morphism(P, src_bars, tgt_bars, lam, static_cast<int>(s), static_cast<int>(t), p));
        }
    return out;
}

}  // namespace detail

// Decides whether any (Lambda_eps, Lambda_eps)-interleaving exists between
// I and M by enumerating scalar coefficients on the Hom generator basis.
inline bool interleaving_exists_bruteforce(const WeightedPoset& P, const Rep& I, const Rep& M, const Rat& eps,
                                           uint64_t cap = kDefaultBruteCap) {
    Translation lam = maximal_translation(P, eps);
    uint32_t p = I.p;
    std::vector<Interval> bi = expand_barcode(decompose(P, I));
    std::vector<Interval> bm = expand_barcode(decompose(P, M));
    detail::HomBasis fwd = detail::hom_basis(P, bi, bm, lam, p);
    detail::HomBasis bwd = detail::hom_basis(P, bm, bi, lam, p);
    std::size_t h = fwd.gens.size() + bwd.gens.size();
    double combos = std::pow(double(p), double(h));
    if (combos > double(cap))
        throw CapExceeded("brute-force interleaving search space exceeds cap");

    RepMorphism int_i = internal_map(P, fwd.src, lam, lam);
    RepMorphism int_m = internal_map(P, bwd.src, lam, lam);
    std::vector<uint32_t> c(h, 0);
    while (true) {
        RepMorphism phi = zero_morphism(fwd.src, fwd.dst);
        for (std::size_t k = 0; k < fwd.gens.size(); ++k)
            if (c[k]) phi = add_morphisms(phi, scale_morphism(fwd.gens[k], c[k]));
        RepMorphism psi = zero_morphism(bwd.src, bwd.dst);
        for (std::size_t k = 0; k < bwd.gens.size(); ++k)
            if (c[fwd.gens.size() + k]) psi = add_morphisms(psi, scale_morphism(bwd.gens[k], c[fwd.gens.size() + k]));
        RepMorphism psi_l = act_morphism(P, psi, lam, bwd.src, bwd.dst);
        RepMorphism phi_l = act_morphism(P, phi, lam, fwd.src, fwd.dst);
        if (morphism_equal(compose_morphisms(psi_l, phi), int_i) &&
            morphism_equal(compose_morphisms(phi_l, psi), int_m))
            return true;
        // odometer
        std::size_t k = 0;
        while (k < h && ++c[k] == p) c[k++] = 0;
        if (k == h) return false;
    }
}

// Least candidate height admitting a brute-force interleaving.
inline Rat interleaving_distance_bruteforce(const WeightedPoset& P, const Rep& I, const Rep& M,
                                            uint64_t cap = kDefaultBruteCap) {
    for (const Rat& eps : candidate_heights(P))
        if (interleaving_exists_bruteforce(P, I, M, eps, cap)) return eps;
    throw ValidationError("no interleaving found at any candidate height");  // unreachable
}

}  // namespace pmod
