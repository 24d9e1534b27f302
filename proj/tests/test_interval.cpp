#include "doctest.h"
#include "helpers.hpp"

using namespace pmod;
using namespace pmod::testing;

namespace {

const std::vector<Rat> kX{0, 1, 3, 4, 5, 7};

Interval iv(const WeightedPoset& P, int lo, int hi) { return {*P.index_of(lo), *P.index_of(hi)}; }

}  // namespace

TEST_CASE("hom criterion and generator") {
    WeightedPoset P(kX, 10);
    CHECK(hom_dim(P, iv(P, 3, 4), iv(P, 0, 4)) == 1);
    CHECK(hom_dim(P, iv(P, 1, 3), iv(P, 0, 4)) == 0);
    CHECK(hom_dim(P, iv(P, 1, 5), iv(P, 1, 5)) == 1);

    CHECK(generator_phi(P, iv(P, 3, 4), iv(P, 0, 4)).carrier == MaybeInterval{iv(P, 3, 4)});
    CHECK(generator_phi(P, iv(P, 1, 3), iv(P, 0, 4)).carrier == std::nullopt);
    CHECK(generator_phi(P, iv(P, 1, 5), iv(P, 1, 5)).carrier == MaybeInterval{iv(P, 1, 5)});
}

TEST_CASE("translation action on intervals") {
    WeightedPoset P(kX, 10);
    Translation l2 = maximal_translation(P, 2);
    CHECK(act(P, iv(P, 1, 5), l2) == MaybeInterval{iv(P, 0, 4)});
    CHECK(act(P, iv(P, 3, 4), l2) == MaybeInterval{iv(P, 1, 1)});
    CHECK(act(P, iv(P, 1, 5), identity_translation(P)) == MaybeInterval{iv(P, 1, 5)});

    Barcode B = canonical_barcode({{iv(P, 1, 5), 1}, {iv(P, 3, 4), 1}});
    Barcode expect = canonical_barcode({{iv(P, 0, 4), 1}, {iv(P, 1, 1), 1}});
    CHECK(act_barcode(P, B, l2) == expect);
    CHECK(act_barcode(P, {}, l2).empty());
    CHECK(act_barcode(P, B, identity_translation(P)) == B);
}

TEST_CASE("action is contravariant") {
    Rng rng(21);
    for (int it = 0; it < 100; ++it) {
        WeightedPoset P = random_poset(rng, rand_int(rng, 1, 6));
        Translation a = maximal_translation(P, rand_int(rng, 0, 6));
        Translation g = maximal_translation(P, rand_int(rng, 0, 6));
        Interval I = random_interval(rng, P);
        MaybeInterval lhs = act(P, I, a);
        if (lhs) lhs = act(P, *lhs, g);
        CHECK(lhs == act(P, I, compose(a, g)));
    }
}

TEST_CASE("widths") {
    WeightedPoset P(kX, 10);
    CHECK(width(P, iv(P, 1, 5)) == 3);
    CHECK(width(P, iv(P, 3, 4)) == 1);
    CHECK(width(P, iv(P, 1, 3)) == 2);
}

TEST_CASE("width equivalence on small random posets") {
    Rng rng(22);
    for (int it = 0; it < 40; ++it) {
        WeightedPoset P = random_poset(rng, rand_int(rng, 1, 6));
        auto all = enumerate_all_translations(P);
        std::vector<Rat> heights;
        for (const auto& t : all) heights.push_back(height(P, t));
        for (int lo = 0; lo < P.size(); ++lo)
            for (int hi = lo; hi < P.size(); ++hi) {
                Interval I{lo, hi};
                Rat w3 = width(P, I);
                CHECK(w3 == width_v2(P, I, all, heights));
                CHECK(w3 == width_v1(P, I, all, heights));
            }
    }
}

TEST_CASE("width characterizes hom vanishing") {
    Rng rng(23);
    for (int it = 0; it < 60; ++it) {
        WeightedPoset P = random_poset(rng, rand_int(rng, 1, 6));
        Interval I = random_interval(rng, P);
        for (const Rat& eps : candidate_heights(P)) {
            Translation lam = maximal_translation(P, eps);
            MaybeInterval il2 = act(P, I, compose(lam, lam));
            int hd = il2 ? hom_dim(P, I, *il2) : 0;
            CHECK((hd == 0) == (width(P, I) <= height(P, lam)));
        }
    }
}

TEST_CASE("successor") {
    WeightedPoset P({0, 1, 3}, 5);
    CHECK(successor(P, PosetPoint::finite(1)) == PosetPoint::finite(2));
    CHECK(successor(P, PosetPoint::finite(2)) == PosetPoint::infinity());
    WeightedPoset Q(kX, 10);
    CHECK(successor(Q, PosetPoint::finite(*Q.index_of(5))) == PosetPoint::finite(*Q.index_of(7)));
    CHECK_THROWS_AS(successor(Q, PosetPoint::infinity()), ValidationError);
}

TEST_CASE("pairwise distance formula") {
    WeightedPoset P(kX, 10);
    CHECK(pairwise_distance(P, iv(P, 1, 5), iv(P, 3, 4)) == 2);
    CHECK(pairwise_distance(P, iv(P, 1, 5), iv(P, 1, 3)) == 3);
    CHECK(pairwise_distance(P, iv(P, 3, 4), iv(P, 3, 4)) == 0);
}

TEST_CASE("pairwise distance is a pseudometric") {
    Rng rng(24);
    for (int it = 0; it < 10; ++it) {
        WeightedPoset P = random_poset(rng, rand_int(rng, 1, 5));
        std::vector<Interval> all;
        for (int lo = 0; lo < P.size(); ++lo)
            for (int hi = lo; hi < P.size(); ++hi) all.push_back({lo, hi});
        for (const auto& a : all) {
            CHECK(pairwise_distance(P, a, a) == 0);
            for (const auto& b : all) {
                CHECK(pairwise_distance(P, a, b) == pairwise_distance(P, b, a));
                for (const auto& c : all)
                    CHECK(pairwise_distance(P, a, b) <=
                          pairwise_distance(P, a, c) + pairwise_distance(P, c, b));
            }
        }
    }
}

TEST_CASE("trims") {
    WeightedPoset P(kX, 10);
    Translation l2 = maximal_translation(P, 2);
    CHECK(trim_quotient(P, iv(P, 1, 5), l2) == MaybeInterval{iv(P, 1, 1)});
    CHECK(trim_quotient(P, iv(P, 3, 4), l2) == std::nullopt);
    CHECK(trim_quotient(P, iv(P, 1, 5), identity_translation(P)) == MaybeInterval{iv(P, 1, 5)});

    CHECK(trim_submodule(P, iv(P, 1, 5), l2) == MaybeInterval{iv(P, 3, 4)});
    CHECK(trim_submodule(P, iv(P, 3, 4), l2) == std::nullopt);
    CHECK(trim_submodule(P, iv(P, 3, 4), identity_translation(P)) == MaybeInterval{iv(P, 3, 4)});
}

TEST_CASE("barcode canonicalization") {
    WeightedPoset P(kX, 10);
    Barcode b = canonical_barcode({{iv(P, 3, 4), 1}, {iv(P, 1, 5), 2}, {iv(P, 3, 4), 1}});
    REQUIRE(b.size() == 2);
    CHECK(b[0].iv == iv(P, 1, 5));
    CHECK(b[0].mult == 2);
    CHECK(b[1].mult == 2);
    CHECK(expand_barcode(b).size() == 4);
    CHECK_THROWS_AS(canonical_barcode({{iv(P, 1, 5), 0}}), ValidationError);
}
