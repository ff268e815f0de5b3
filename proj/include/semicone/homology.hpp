#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "linalg.hpp"
#include "semigroup.hpp"

namespace semicone {

// Abstract simplicial complex on generator indices 0..vertex_count-1. Faces
// are sorted index lists; the family is downward closed and contains the
// empty face whenever it is nonempty.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::vector<int>> faces;
};

// Squarefree divisor complex of b: faces F with b - sum_{j in F} a_j in S.
// The membership test is injected so heavy callers can share a cache.
template <typename Contains>
SimplicialComplex divisor_complex_with(const AffineSemigroup& s, const Point& b,
                                       Contains&& member) {
    if (!member(b))
        throw InvalidInput(InvalidInput::Kind::NotInSemigroup,
                           AffineSemigroup::point_string(b) +
                               " is not in the semigroup");
    int n = s.generator_count();
    SimplicialComplex k;
    k.vertex_count = n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        Point rest = b;
        std::vector<int> face;
        bool feasible = true;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (std::uint64_t(1) << j))) continue;
            rest = sub(rest, s.generators()[static_cast<std::size_t>(j)]);
            face.push_back(j);
            if (!nonnegative(rest)) {
                feasible = false;
                break;
            }
        }
        if (feasible && member(rest)) k.faces.push_back(std::move(face));
    }
    std::sort(k.faces.begin(), k.faces.end(),
              [](const std::vector<int>& a, const std::vector<int>& b2) {
                  if (a.size() != b2.size()) return a.size() < b2.size();
                  return a < b2;
              });
    // Downward closure holds because removing a generator from a sum keeps it
    // in S; verify anyway.
    for (const std::vector<int>& f : k.faces) {
        if (f.empty()) continue;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            std::vector<int> sub_face;
            for (std::size_t t = 0; t < f.size(); ++t) {
                if (t != drop) sub_face.push_back(f[t]);
            }
            if (!std::binary_search(
                    k.faces.begin(), k.faces.end(), sub_face,
                    [](const std::vector<int>& a, const std::vector<int>& b2) {
                        if (a.size() != b2.size()) return a.size() < b2.size();
                        return a < b2;
                    }))
                throw Internal("divisor complex not downward closed");
        }
    }
    return k;
}

inline SimplicialComplex divisor_complex(const AffineSemigroup& s, const Point& b) {
    return divisor_complex_with(s, b, [&](const Point& v) { return s.contains(v); });
}

// Reduced homology ranks over the rationals: entry k holds rank of the
// reduced homology in dimension k-1, so index 0 reports the empty-face
// dimension (rank 1 exactly for the complex {emptyset}).
inline std::vector<std::int64_t> reduced_homology_ranks(const SimplicialComplex& k) {
    if (k.faces.empty()) return {};
    // Group faces by cardinality; chain group C_{c-1} has the c-element faces
    // as basis, including C_{-1} for the empty face.
    std::size_t maxcard = 0;
    for (const auto& f : k.faces) maxcard = std::max(maxcard, f.size());
    std::vector<std::vector<std::vector<int>>> grade(maxcard + 1);
    for (const auto& f : k.faces) grade[f.size()].push_back(f);
    std::vector<std::map<std::vector<int>, std::size_t>> index(maxcard + 1);
    for (std::size_t c = 0; c <= maxcard; ++c) {
        for (std::size_t i = 0; i < grade[c].size(); ++i) index[c][grade[c][i]] = i;
    }
    if (grade[0].empty()) throw Internal("nonempty complex without empty face");

    // boundary[c]: C_c faces (cardinality c+1) -> C_{c-1}.
    std::vector<int> ranks(maxcard + 1, 0);
    for (std::size_t c = 1; c <= maxcard; ++c) {
        if (grade[c].empty()) continue;
        IntMatrix m(grade[c - 1].size(), std::vector<Integer>(grade[c].size(), 0));
        for (std::size_t j = 0; j < grade[c].size(); ++j) {
            const std::vector<int>& f = grade[c][j];
            int sign = 1;
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> sub_face;
                for (std::size_t t = 0; t < f.size(); ++t) {
                    if (t != drop) sub_face.push_back(f[t]);
                }
                m[index[c - 1].at(sub_face)][j] = sign;
                sign = -sign;
            }
        }
        ranks[c] = matrix_rank(std::move(m));
    }
    std::vector<std::int64_t> h(maxcard + 1, 0);
    for (std::size_t c = 0; c <= maxcard; ++c) {
        std::int64_t dim = static_cast<std::int64_t>(grade[c].size());
        std::int64_t out = (c + 1 <= maxcard) ? ranks[c + 1] : 0;
        h[c] = dim - ranks[c] - out;
        if (h[c] < 0) throw Internal("negative homology rank");
    }
    return h;
}

}  // namespace semicone
