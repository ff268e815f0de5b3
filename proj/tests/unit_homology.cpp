#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "oracles.hpp"
#include "semicone/semicone.hpp"
#include "test_util.hpp"

using namespace semicone;
using testutil::numerical;
using testutil::planar;
using testutil::pt;

namespace {

SimplicialComplex complex_of(int vertices,
                             std::vector<std::vector<int>> faces) {
    SimplicialComplex k;
    k.vertex_count = vertices;
    k.faces = std::move(faces);
    return k;
}

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> h) {
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

}  // namespace

TEST_CASE("reduced homology of hand built complexes") {
    // The void complex has no homology at all.
    CHECK(reduced_homology_ranks(complex_of(0, {})).empty());
    // Only the empty face: one unit of homology in dimension -1.
    CHECK(trimmed(reduced_homology_ranks(complex_of(0, {{}}))) ==
          std::vector<std::int64_t>{1});
    // A point is acyclic.
    CHECK(trimmed(reduced_homology_ranks(complex_of(1, {{}, {0}}))).empty());
    // Two points: one reduced component, reported at index 1.
    CHECK(trimmed(reduced_homology_ranks(complex_of(2, {{}, {0}, {1}}))) ==
          std::vector<std::int64_t>{0, 1});
    // Hollow triangle: a single one-dimensional cycle.
    CHECK(trimmed(reduced_homology_ranks(complex_of(
              3, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}))) ==
          std::vector<std::int64_t>{0, 0, 1});
    // Filling the triangle kills the cycle.
    CHECK(trimmed(reduced_homology_ranks(complex_of(
              3, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}})))
              .empty());
    // Two hollow triangles sharing a vertex: two independent cycles.
    CHECK(trimmed(reduced_homology_ranks(complex_of(
              5, {{},
                  {0}, {1}, {2}, {3}, {4},
                  {0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}))) ==
          std::vector<std::int64_t>{0, 0, 2});
}

TEST_CASE("both homology engines agree on the hand built complexes") {
    std::vector<std::vector<std::vector<int>>> cases = {
        {{}},
        {{}, {0}},
        {{}, {0}, {1}},
        {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}},
        {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}},
        {{}, {0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}},
    };
    for (const auto& faces : cases) {
        int vertices = 0;
        for (const auto& f : faces)
            for (int v : f) vertices = std::max(vertices, v + 1);
        std::vector<std::int64_t> lib =
            reduced_homology_ranks(complex_of(vertices, faces));
        std::vector<int> orc = oracle::homology_ranks(faces, vertices + 1);
        for (std::size_t c = 0; c < std::max(lib.size(), orc.size()); ++c) {
            std::int64_t a = c < lib.size() ? lib[c] : 0;
            int b = c < orc.size() ? orc[c] : 0;
            CHECK(a == b);
        }
    }
}

TEST_CASE("divisor complex of a relation degree") {
    AffineSemigroup s = numerical({4, 6, 9});
    SimplicialComplex k = divisor_complex(s, pt({12}));
    CHECK(k.vertex_count == 3);
    CHECK(k.faces == std::vector<std::vector<int>>{{}, {0}, {1}});
    CHECK(trimmed(reduced_homology_ranks(k)) ==
          std::vector<std::int64_t>{0, 1});

    CHECK_THROWS_AS(divisor_complex(s, pt({5})), InvalidInput);
}

TEST_CASE("divisor complexes match the enumeration oracle") {
    for (const AffineSemigroup& s :
         {numerical({5, 6, 9}), numerical({4, 5, 11})}) {
        for (std::int64_t v = 0; v <= 40; ++v) {
            Point b = pt({v});
            if (!s.contains(b)) continue;
            std::vector<std::vector<int>> faces = divisor_complex(s, b).faces;
            std::vector<std::vector<int>> want =
                oracle::divisor_faces(s.generators(), b);
            std::sort(faces.begin(), faces.end());
            std::sort(want.begin(), want.end());
            CHECK(faces == want);
        }
    }
    AffineSemigroup p = planar({{0, 2}, {2, 1}, {0, 3}, {1, 2}});
    for (std::int64_t x = 0; x <= 6; ++x) {
        for (std::int64_t y = 0; y <= 8; ++y) {
            Point b = pt({x, y});
            if (!p.contains(b)) continue;
            std::vector<std::vector<int>> faces = divisor_complex(p, b).faces;
            std::vector<std::vector<int>> want =
                oracle::divisor_faces(p.generators(), b);
            std::sort(faces.begin(), faces.end());
            std::sort(want.begin(), want.end());
            CHECK(faces == want);
        }
    }
}
