#pragma once

// Shared helpers for building small fixtures in the tests.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "semicone/semicone.hpp"

namespace testutil {

using semicone::AffineSemigroup;
using semicone::Binomial;
using semicone::Exponents;
using semicone::Integer;
using semicone::Point;

inline Point pt(std::initializer_list<std::int64_t> cs) {
    Point p;
    for (std::int64_t c : cs) p.push_back(Integer(c));
    return p;
}

inline AffineSemigroup numerical(std::initializer_list<std::int64_t> values) {
    std::vector<Point> gens;
    for (std::int64_t v : values) gens.push_back(Point{Integer(v)});
    return AffineSemigroup::create(1, gens);
}

inline AffineSemigroup planar(std::initializer_list<std::initializer_list<std::int64_t>> pts) {
    std::vector<Point> gens;
    for (const auto& p : pts) gens.push_back(pt(p));
    return AffineSemigroup::create(2, gens);
}

inline Exponents ex(std::initializer_list<std::int64_t> cs) { return Exponents(cs); }

inline Binomial bin(std::initializer_list<std::int64_t> plus,
                    std::initializer_list<std::int64_t> minus) {
    return Binomial{Exponents(plus), Exponents(minus)};
}

// Order-insensitive comparison up to overall sign of each element.
inline bool same_binomials_up_to_sign(std::vector<Binomial> a,
                                      std::vector<Binomial> b) {
    if (a.size() != b.size()) return false;
    auto key = [](const Binomial& f) {
        Exponents p = f.plus;
        Exponents m = f.minus ? *f.minus : Exponents(p.size(), 0);
        return p < m ? std::pair{p, m} : std::pair{m, p};
    };
    std::vector<std::pair<Exponents, Exponents>> ka, kb;
    for (const Binomial& f : a) ka.push_back(key(f));
    for (const Binomial& f : b) kb.push_back(key(f));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

}  // namespace testutil
