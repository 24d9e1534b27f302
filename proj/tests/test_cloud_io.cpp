#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

using namespace pmod;
using namespace pmod::testing;

namespace {

PointCloud line_cloud(std::vector<Rat> xs, Metric m = Metric::LInf) {
    PointCloud c;
    c.metric = m;
    for (Rat& x : xs) c.points.push_back({x});
    return c;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-2.5") == Rat(-5) / 2);
    CHECK(parse_rational("3/4") == Rat(3) / 4);
    CHECK(parse_rational("0.125") == Rat(1) / 8);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
    CHECK(format_rational(Rat(7)) == "7");
    CHECK(format_rational(Rat(-5) / 2) == "-2.5");
    CHECK(format_rational(Rat(1) / 3) == "1/3");
    CHECK(parse_rational(format_rational(Rat(22) / 7)) == Rat(22) / 7);
}

TEST_CASE("cloud distances") {
    PointCloud c;
    c.points = {{0, 0}, {3, 4}};
    c.metric = Metric::L1;
    CHECK(cloud_distance(c, 0, 1) == 7);
    c.metric = Metric::LInf;
    CHECK(cloud_distance(c, 0, 1) == 4);
    c.metric = Metric::EuclideanSquared;
    CHECK(cloud_distance(c, 0, 1) == 25);

    PointCloud bad;
    bad.points = {{0}, {1, 2}};
    CHECK_THROWS_AS(check_cloud(bad), ValidationError);
    CHECK_THROWS_AS(check_cloud(PointCloud{}), ValidationError);
}

TEST_CASE("jump discontinuities") {
    CHECK(jump_discontinuities(line_cloud({0, 1, 10})) == JumpSet{1, 9, 10});
    CHECK(jump_discontinuities(line_cloud({5})).empty());
    CHECK(jump_discontinuities(line_cloud({2, 2, 3})) == JumpSet{0, 1});
    CHECK(union_jump_sets({{1, 3}, {2, 3}, {}}) == JumpSet{1, 2, 3});
}

TEST_CASE("single-linkage barcode") {
    ContinuousBarcode b = h0_barcode(line_cloud({0, 1, 10}));
    REQUIRE(b.size() == 3);
    CHECK(b[0].r == 0);
    CHECK(b[0].death == std::optional<Rat>{1});
    CHECK(b[1].death == std::optional<Rat>{9});
    CHECK(!b[2].death);

    ContinuousBarcode solo = h0_barcode(line_cloud({4}));
    REQUIRE(solo.size() == 1);
    CHECK(!solo[0].death);

    // coincident points merge at scale 0 and yield no finite bar
    ContinuousBarcode co = h0_barcode(line_cloud({2, 2}));
    REQUIRE(co.size() == 1);
    CHECK(!co[0].death);
}

TEST_CASE("merge scales are jump discontinuities") {
    Rng rng(61);
    for (int it = 0; it < 40; ++it) {
        PointCloud c;
        c.metric = it % 2 ? Metric::L1 : Metric::EuclideanSquared;
        int n = rand_int(rng, 1, 6), dim = rand_int(rng, 1, 3);
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> pt;
            for (int k = 0; k < dim; ++k) pt.push_back(rand_int(rng, -5, 5));
            c.points.push_back(pt);
        }
        JumpSet jumps = jump_discontinuities(c);
        ContinuousBarcode b = h0_barcode(c);
        int infinite = 0;
        for (const auto& bar : b) {
            if (!bar.death) {
                ++infinite;
                continue;
            }
            CHECK(std::find(jumps.begin(), jumps.end(), *bar.death) != jumps.end());
        }
        CHECK(infinite == 1);
    }
}

TEST_CASE("poset round trip") {
    std::istringstream in("b 10\n0\n1\n3\n4\n5\n7\n");
    WeightedPoset P = parse_poset(in);
    CHECK(P.size() == 6);
    CHECK(P.b() == 10);
    std::ostringstream out;
    print_poset(out, P);
    std::istringstream back(out.str());
    CHECK(parse_poset(back).points() == P.points());

    std::istringstream bad("0\n1\n");
    CHECK_THROWS_AS(parse_poset(bad), ValidationError);
    std::istringstream bad2("b 5\n1\n0\n");
    CHECK_THROWS_AS(parse_poset(bad2), ValidationError);
}

TEST_CASE("barcode round trip") {
    WeightedPoset P({0, 1, 3, 4, 5, 7}, 10);
    std::istringstream in("1 5 1\n3 4 2\n");
    Barcode B = parse_barcode(in, P);
    REQUIRE(B.size() == 2);
    CHECK(B[0].iv == Interval{1, 4});
    CHECK(B[1].mult == 2);
    std::ostringstream out;
    print_barcode(out, P, B);
    std::istringstream back(out.str());
    CHECK(parse_barcode(back, P) == B);

    std::istringstream bad("2 5 1\n");
    CHECK_THROWS_AS(parse_barcode(bad, P), ValidationError);
    std::istringstream bad2("5 1 1\n");
    CHECK_THROWS_AS(parse_barcode(bad2, P), ValidationError);
    std::istringstream bad3("1 5 0\n");
    CHECK_THROWS_AS(parse_barcode(bad3, P), ValidationError);
}

TEST_CASE("continuous barcode round trip") {
    std::istringstream in("0 4 1\n1 inf 2\n");
    ContinuousBarcode B = parse_continuous(in);
    REQUIRE(B.size() == 2);
    CHECK(B[0].death == std::optional<Rat>{4});
    CHECK(!B[1].death);
    std::ostringstream out;
    print_continuous(out, B);
    CHECK(out.str() == "0 4 1\n1 inf 2\n");

    std::istringstream bad("4 0 1\n");
    CHECK_THROWS_AS(parse_continuous(bad), ValidationError);
}

TEST_CASE("cloud round trip") {
    std::istringstream in("0,0\n3,4\n");
    PointCloud c = parse_cloud(in, Metric::L1);
    REQUIRE(c.points.size() == 2);
    CHECK(cloud_distance(c, 0, 1) == 7);
    std::ostringstream out;
    print_cloud(out, c);
    CHECK(out.str() == "0,0\n3,4\n");
}

TEST_CASE("matching report format") {
    WeightedPoset P({0, 1, 3, 4, 5, 7}, 10);
    auto idx = [&](int x) { return *P.index_of(x); };
    Barcode BA{{Interval{idx(1), idx(5)}, 1}};
    Barcode BCD = canonical_barcode({{Interval{idx(1), idx(3)}, 1}, {Interval{idx(3), idx(4)}, 1}});
    MatchingRecord m{{{0, 0}}, {}, {1}};
    std::ostringstream out;
    print_matching_report(out, P, m, BA, BCD);
    CHECK(out.str() == "MATCH 1,5 1,3 dist=3\nUNMATCHED-RIGHT 3,4 width=1\nHEIGHT 3\n");
}

TEST_CASE("limit table format") {
    std::vector<LimitRow> rows{{0, 4, Rat(3), Rat(1) / 2, Rat(1), Rat(1)}};
    std::ostringstream out;
    print_limit_table(out, rows);
    CHECK(out.str() == "step\t|X|\tmesh\tlower\tupper\tclassical\n0\t4\t3\t0.5\t1\t1\n");
}
