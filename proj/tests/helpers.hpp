#pragma once

#include <random>

#include "pmod/pmod.hpp"

namespace pmod::testing {

// Deterministic RNG: every property test freezes its own seed.
using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Strictly increasing integer-ish coordinates with small random gaps;
// optional denominator keeps values rational but non-integral.
inline std::vector<Rat> random_coords(Rng& rng, int n, int max_gap = 4, int den = 1) {
    std::vector<Rat> pts;
    Rat cur = rand_int(rng, -3, 3);
    for (int i = 0; i < n; ++i) {
        pts.push_back(Rat(cur) / den);
        cur += rand_int(rng, 1, max_gap);
    }
    return pts;
}

inline WeightedPoset random_poset(Rng& rng, int n, int max_gap = 4) {
    auto pts = random_coords(rng, n, max_gap);
    Rat b = rand_int(rng, 1, 6);
    if (rand_int(rng, 0, 1)) b = WeightedPoset::default_b(pts);
    return WeightedPoset(pts, b);
}

inline Interval random_interval(Rng& rng, const WeightedPoset& P) {
    int lo = rand_int(rng, 0, P.size() - 1);
    int hi = rand_int(rng, lo, P.size() - 1);
    return {lo, hi};
}

inline Barcode random_barcode(Rng& rng, const WeightedPoset& P, int max_bars, int max_mult = 2) {
    Barcode b;
    int bars = rand_int(rng, 0, max_bars);
    for (int k = 0; k < bars; ++k) b.push_back({random_interval(rng, P), rand_int(rng, 1, max_mult)});
    return canonical_barcode(b);
}

// Random morphism rep(B1) -> rep(B2): random scalars on the Hom generator
// basis at the identity translation.
inline RepMorphism random_morphism(Rng& rng, const WeightedPoset& P, const Barcode& B1, const Barcode& B2,
                                   uint32_t p = 2) {
    std::vector<Interval> e1 = expand_barcode(B1), e2 = expand_barcode(B2);
    Translation id = identity_translation(P);
    RepMorphism f = zero_morphism(rep_from_expanded(P, e1, p), rep_from_expanded(P, e2, p));
    for (std::size_t s = 0; s < e1.size(); ++s)
        for (std::size_t t = 0; t < e2.size(); ++t) {
            if (hom_dim(P, e1[s], e2[t]) == 0) continue;
            uint32_t c = static_cast<uint32_t>(rand_int(rng, 0, static_cast<int>(p) - 1));
            if (c)
                f = add_morphisms(f, scale_morphism(generator_morphism(P, e1, e2, id, static_cast<int>(s),
                                                                      static_cast<int>(t), p),
                                                    c));
        }
    return f;
}

// Diagonal interleaving built from an eps-matching: matched pairs exchange
// generators, unmatched bars map to zero.
struct DiagonalInterleaving {
    Rep I, M;
    RepMorphism phi, psi;
    Translation lam;
};

inline DiagonalInterleaving diagonal_interleaving(const WeightedPoset& P, const Barcode& B1, const Barcode& B2,
                                                  const MatchingRecord& m, const Rat& eps, uint32_t p = 2) {
    std::vector<Interval> e1 = expand_barcode(B1), e2 = expand_barcode(B2);
    DiagonalInterleaving d;
    d.lam = maximal_translation(P, eps);
    d.I = rep_from_expanded(P, e1, p);
    d.M = rep_from_expanded(P, e2, p);
    d.phi = zero_morphism(d.I, act_rep(P, d.M, d.lam));
    d.psi = zero_morphism(d.M, act_rep(P, d.I, d.lam));
    for (auto& [s, t] : m.pairs) {
        d.phi = add_morphisms(d.phi, generator_morphism(P, e1, e2, d.lam, s, t, p));
        d.psi = add_morphisms(d.psi, generator_morphism(P, e2, e1, d.lam, t, s, p));
    }
    return d;
}

}  // namespace pmod::testing
