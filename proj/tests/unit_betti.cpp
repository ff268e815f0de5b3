#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "semicone/semicone.hpp"
#include "test_util.hpp"

using namespace semicone;
using testutil::bin;
using testutil::ex;
using testutil::numerical;
using testutil::planar;
using testutil::pt;

namespace {

// Fine Betti numbers by brute force: walk every semigroup element in the
// range, build its divisor complex with the independent enumerator, and read
// off reduced homology ranks. Completely disjoint from the library pipeline.
std::map<std::pair<int, Point>, std::int64_t> brute_table(
    const AffineSemigroup& s, const std::vector<Point>& degrees) {
    std::map<std::pair<int, Point>, std::int64_t> out;
    for (const Point& b : degrees) {
        if (!oracle::member(s.generators(), b)) continue;
        std::vector<std::vector<int>> faces =
            oracle::divisor_faces(s.generators(), b);
        std::vector<int> h =
            oracle::homology_ranks(faces, s.generator_count() + 1);
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (h[i] != 0) out[{static_cast<int>(i), b}] = h[i];
        }
    }
    return out;
}

std::vector<Point> range_1d(std::int64_t hi) {
    std::vector<Point> out;
    for (std::int64_t v = 0; v <= hi; ++v) out.push_back(pt({v}));
    return out;
}

std::vector<Point> range_2d(std::int64_t hx, std::int64_t hy) {
    std::vector<Point> out;
    for (std::int64_t x = 0; x <= hx; ++x)
        for (std::int64_t y = 0; y <= hy; ++y) out.push_back(pt({x, y}));
    return out;
}

bool within(const Point& b, const Point& hi) {
    for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j] > hi[j]) return false;
    return true;
}

void check_fine_table(const AffineSemigroup& s,
                      const std::vector<Point>& degrees, const Point& hi) {
    FineBettiTable table = betti_semigroup(s);
    for (const auto& [key, rank] : table.entries) {
        REQUIRE(within(key.second, hi));  // scan range covers the table
        CHECK(rank > 0);
    }
    CHECK(table.entries == brute_table(s, degrees));
}

}  // namespace

TEST_CASE("fine Betti tables match the brute force oracle") {
    check_fine_table(numerical({2, 3}), range_1d(40), pt({40}));
    check_fine_table(numerical({4, 6, 9}), range_1d(60), pt({60}));
    check_fine_table(numerical({5, 6, 9}), range_1d(60), pt({60}));
    check_fine_table(numerical({4, 5, 11}), range_1d(60), pt({60}));
    check_fine_table(planar({{0, 2}, {2, 1}, {0, 3}, {1, 2}}),
                     range_2d(8, 14), pt({8, 14}));
}

TEST_CASE("fine Betti totals of the fixtures") {
    CHECK(betti_semigroup(numerical({2, 3})).totals ==
          std::vector<std::int64_t>{1, 1});
    CHECK(betti_semigroup(numerical({4, 6, 9})).totals ==
          std::vector<std::int64_t>{1, 2, 1});
    CHECK(betti_semigroup(numerical({5, 6, 9})).totals ==
          std::vector<std::int64_t>{1, 2, 1});
    CHECK(betti_semigroup(numerical({4, 5, 11})).totals ==
          std::vector<std::int64_t>{1, 3, 2});
}

TEST_CASE("first syzygies sit at the minimal generator degrees") {
    AffineSemigroup s = numerical({5, 6, 9});
    FineBettiTable table = betti_semigroup(s);
    std::map<Point, std::int64_t> row1;
    for (const auto& [key, rank] : table.entries) {
        if (key.first == 1) row1[key.second] += rank;
    }
    std::map<Point, std::int64_t> want;
    for (const Binomial& f : toric_ideal(s))
        want[oracle::s_degree_of(s.generators(), f.plus)] += 1;
    CHECK(row1 == want);
}

TEST_CASE("Koszul engine on a monomial complete intersection") {
    GradedBettiTable t = betti_standard_graded(
        {make_monomial(ex({2, 0})), make_monomial(ex({0, 3}))}, 2);
    CHECK(t.totals == std::vector<std::int64_t>{1, 2, 1});
    std::map<std::pair<int, std::int64_t>, std::int64_t> want = {
        {{0, 0}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{2, 5}, 1}};
    CHECK(t.entries == want);
}

TEST_CASE("Koszul engine on the twisted cubic") {
    AffineSemigroup s = AffineSemigroup::create(
        2, {pt({3, 0}), pt({2, 1}), pt({1, 2}), pt({0, 3})});
    std::vector<Binomial> gens = toric_ideal(s);
    CHECK(gens.size() == 3);
    GradedBettiTable t = betti_standard_graded(gens, 4);
    CHECK(t.totals == std::vector<std::int64_t>{1, 3, 2});
    std::map<std::pair<int, std::int64_t>, std::int64_t> want = {
        {{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}};
    CHECK(t.entries == want);
}

TEST_CASE("Koszul engine rejects inhomogeneous input") {
    CHECK_THROWS_AS(betti_standard_graded({bin({3, 0}, {0, 2})}, 2),
                    InvalidInput);
}

TEST_CASE("engine comparison when the hypotheses hold") {
    for (const AffineSemigroup& s :
         {numerical({4, 6, 9}), planar({{0, 2}, {2, 1}, {0, 3}, {1, 2}})}) {
        BettiComparison c = betti_compare(s);
        CHECK(c.cm_hypothesis);
        CHECK(c.support_hypothesis);
        CHECK(c.hypotheses_hold);
        CHECK(c.totals_equal);
        CHECK(c.semigroup_table.totals == std::vector<std::int64_t>{1, 2, 1});
    }
}

TEST_CASE("graded numbers strictly dominate when hypotheses fail") {
    BettiComparison c = betti_compare(numerical({4, 5, 11}));
    CHECK_FALSE(c.cm_hypothesis);
    CHECK(c.support_hypothesis);
    CHECK_FALSE(c.totals_equal);
    CHECK(c.semigroup_table.totals == std::vector<std::int64_t>{1, 3, 2});
    CHECK(c.graded_table.totals == std::vector<std::int64_t>{1, 4, 4, 1});

    BettiComparison d = betti_compare(numerical({5, 6, 9}));
    CHECK(d.cm_hypothesis);
    CHECK_FALSE(d.support_hypothesis);
    CHECK_FALSE(d.totals_equal);
    CHECK(d.semigroup_table.totals == std::vector<std::int64_t>{1, 2, 1});
    CHECK(d.graded_table.totals == std::vector<std::int64_t>{1, 3, 2});
}

TEST_CASE("taylor generator cap aborts the fine engine") {
    Limits tiny;
    tiny.max_taylor_generators = 2;
    CHECK_THROWS_AS(betti_semigroup(numerical({4, 5, 11}), tiny),
                    ResourceBound);
}
