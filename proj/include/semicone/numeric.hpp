#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace semicone {

// Exact scalar types. Every computation in the library is exact; there is no
// floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A point of the ambient lattice ZZ^d (usually NN^d).
using Point = std::vector<Integer>;

inline Integer coordinate_sum(const Point& p) {
    Integer s = 0;
    for (const Integer& c : p) s += c;
    return s;
}

inline bool is_zero(const Point& p) {
    for (const Integer& c : p) {
        if (c != 0) return false;
    }
    return true;
}

inline void check_same_length(std::size_t a, std::size_t b, const char* where) {
    if (a != b) {
        throw InvalidInput(InvalidInput::Kind::LengthMismatch,
                           std::string(where) + ": tuple lengths " +
                               std::to_string(a) + " and " + std::to_string(b) +
                               " differ");
    }
}

inline Point add(const Point& a, const Point& b) {
    check_same_length(a.size(), b.size(), "point add");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Componentwise difference; caller checks nonnegativity if it matters.
inline Point sub(const Point& a, const Point& b) {
    check_same_length(a.size(), b.size(), "point sub");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point scale(const Integer& k, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

inline bool leq(const Point& a, const Point& b) {
    check_same_length(a.size(), b.size(), "point leq");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

inline bool nonnegative(const Point& a) {
    for (const Integer& c : a) {
        if (c < 0) return false;
    }
    return true;
}

// gcd of all coordinates, 0 for the zero vector.
inline Integer content(const Point& a) {
    Integer g = 0;
    for (const Integer& c : a) g = boost::multiprecision::gcd(g, c);
    return g;
}

// a / content(a); identifies all lattice points on the same ray.
inline Point primitive_direction(const Point& a) {
    Integer g = content(a);
    if (g == 0) throw Internal("primitive_direction of zero vector");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

inline Integer int_pow(Integer base, std::uint64_t e) {
    Integer r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Caps for the potentially explosive steps. Hitting one raises ResourceBound;
// results are never silently truncated.
struct Limits {
    std::uint64_t max_standard_monomials = 200000;
    std::uint64_t max_basis_elements = 20000;
    std::uint64_t max_reduction_steps = 2000000;
    std::uint64_t max_enumeration = 4000000;
    int max_taylor_generators = 16;
};

}  // namespace semicone
