#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ideal.hpp"
#include "semigroup.hpp"
#include "toric.hpp"

namespace semicone {

// Memoized membership and maximal-length recursion over the lattice. Agrees
// with AffineSemigroup::contains/order everywhere (property-tested); exists
// because the bounded scans below query thousands of nearby points and the
// plain factorization walk would repeat all of its work each time.
class OrderCache {
public:
    explicit OrderCache(const AffineSemigroup& s) : s_(s) {}

    bool contains(const Point& v) {
        if (!nonnegative(v)) return false;
        if (is_zero(v)) return true;
        auto it = member_.find(v);
        if (it != member_.end()) return it->second;
        member_[v] = false;  // cut cycles; overwritten below
        bool in = false;
        for (const Point& g : s_.generators()) {
            if (leq(g, v) && contains(sub(v, g))) {
                in = true;
                break;
            }
        }
        member_[v] = in;
        return in;
    }

    // Max factorization length; -1 when v is not in the semigroup.
    std::int64_t order(const Point& v) {
        if (!contains(v)) return -1;
        if (is_zero(v)) return 0;
        auto it = order_.find(v);
        if (it != order_.end()) return it->second;
        std::int64_t best = -1;
        for (const Point& g : s_.generators()) {
            if (!leq(g, v)) continue;
            Point w = sub(v, g);
            if (!contains(w)) continue;
            best = std::max(best, 1 + order(w));
        }
        order_[v] = best;
        return best;
    }

private:
    const AffineSemigroup& s_;
    std::map<Point, bool> member_;
    std::map<Point, std::int64_t> order_;
};

struct AperySet {
    // Elements b with b - a_i outside S for every extremal a_i, sorted
    // lexicographically. 0 is always present.
    std::vector<Point> elements;
    std::map<Point, std::set<std::int64_t>> length_sets;
};

// Apery set w.r.t. the extremal rays, via standard monomials: the monomials
// outside the leading ideal of I(S) + (z_1..z_d) biject with AP(S,E) through
// the S-degree, because each graded piece of the quotient has dimension at
// most one.
inline AperySet apery_set(const AffineSemigroup& s, const Limits& limits = {}) {
    std::size_t n = s.generators().size();
    TermOrder drl{OrderKind::DegRevLex, 0};
    std::vector<Binomial> gens = toric_groebner(s, drl, limits);
    for (int i = 0; i < s.dim(); ++i)
        gens.push_back(make_monomial(unit_exponent(n, static_cast<std::size_t>(i))));
    std::vector<Binomial> gb = reduced_groebner_basis(gens, drl, limits);
    StandardMonomials sm = standard_monomials(gb, n, limits);
    if (!sm.finite)
        throw Internal("Apery standard-monomial basis is infinite for a simplicial semigroup");

    AperySet ap;
    std::set<Point> seen;
    for (const Exponents& m : sm.monomials) {
        Point b = s_degree(m, s);
        if (!seen.insert(b).second)
            throw Internal("two standard monomials share an S-degree");
        ap.elements.push_back(std::move(b));
    }
    std::sort(ap.elements.begin(), ap.elements.end());
    for (const Point& b : ap.elements) {
        ap.length_sets[b] = s.length_set(b);
        for (const Point& a : s.extremal_rays()) {
            Point w = sub(b, a);
            if (nonnegative(w) && s.contains(w))
                throw Internal("Apery element " + AffineSemigroup::point_string(b) +
                               " minus an extremal ray stays in S");
        }
    }
    return ap;
}

struct HomogeneityWitness {
    bool homogeneous = false;
    // Present iff !homogeneous: an Apery element with >= 2 lengths.
    std::optional<Point> witness;
    std::set<std::int64_t> witness_lengths;
};

// S is homogeneous iff every Apery element factors in a single length.
inline HomogeneityWitness is_homogeneous_semigroup(const AffineSemigroup& s,
                                                   const Limits& limits = {}) {
    AperySet ap = apery_set(s, limits);
    HomogeneityWitness w;
    for (const Point& b : ap.elements) {
        const std::set<std::int64_t>& ls = ap.length_sets.at(b);
        if (ls.size() > 1) {
            w.homogeneous = false;
            w.witness = b;
            w.witness_lengths = ls;
            return w;
        }
    }
    w.homogeneous = true;
    return w;
}

struct ObstructionWitness {
    Point b;
    int ray_index = -1;
    std::int64_t ord_b = 0;
    std::int64_t ord_b_plus = 0;  // ord(b + a_i) > ord_b + 1
};

namespace detail {

template <typename F>
void walk_box(Point& v, std::size_t coord, const Integer& budget, F&& visit) {
    if (coord == v.size()) {
        visit(v);
        return;
    }
    for (Integer c = 0; c <= budget; ++c) {
        v[coord] = c;
        walk_box(v, coord + 1, budget - c, visit);
    }
    v[coord] = 0;
}

}  // namespace detail

// Elements b of S with coordinate sum <= degree_bound where adding some
// extremal ray raises the order by more than one. An empty list within a
// sufficient bound corroborates Cohen-Macaulayness of the associated graded
// ring; a nonempty one certifies its failure.
inline std::vector<ObstructionWitness> order_obstructions(
    const AffineSemigroup& s, const Integer& degree_bound,
    const Limits& limits = {}) {
    if (degree_bound < 0)
        throw InvalidInput(InvalidInput::Kind::Malformed, "negative degree bound");
    OrderCache cache(s);
    std::vector<ObstructionWitness> out;
    std::uint64_t visited = 0;
    Point v(static_cast<std::size_t>(s.dim()), 0);
    detail::walk_box(v, 0, degree_bound, [&](const Point& b) {
        if (++visited > limits.max_enumeration)
            throw ResourceBound("order scan exceeded enumeration limit",
                                limits.max_enumeration);
        if (!cache.contains(b)) return;
        std::int64_t ord_b = cache.order(b);
        for (int i = 0; i < s.dim(); ++i) {
            Point c = add(b, s.generators()[static_cast<std::size_t>(i)]);
            std::int64_t ord_c = cache.order(c);
            if (ord_c > ord_b + 1) {
                ObstructionWitness w;
                w.b = b;
                w.ray_index = i;
                w.ord_b = ord_b;
                w.ord_b_plus = ord_c;
                out.push_back(std::move(w));
            }
        }
    });
    return out;
}

// Heuristic default scan bound: twice the largest coordinate sum over the
// Apery set (the S-degrees of the standard monomials of I(S) + (z_1..z_d)),
// floored at twice the heaviest generator. Obstruction witnesses live near
// the Apery set, so this covers the region where they show up in practice.
inline Integer default_obstruction_bound(const AffineSemigroup& s,
                                         const Limits& limits = {}) {
    Integer best = 0;
    for (const Point& b : apery_set(s, limits).elements)
        best = std::max(best, coordinate_sum(b));
    for (const Point& g : s.generators())
        best = std::max(best, coordinate_sum(g));
    return 2 * best;
}

struct ReductionCertificate {
    bool certified = false;
    int n = -1;  // smallest level with (n+1)M = union_i (a_i + nM); -1 if none
    int n_max = 0;
};

// Bounded certificate that the extremal rays generate a reduction of the
// maximal ideal. Level n holds iff every s with ord(s) = n+1 has some
// extremal a_i with s - a_i in S of order >= n; both sides of the set
// equality are S-ideals, so checking the order-(n+1) layer (which contains
// all minimal generators of (n+1)M) decides it.
inline ReductionCertificate verify_reduction(const AffineSemigroup& s,
                                             int n_max = 8,
                                             const Limits& limits = {}) {
    ReductionCertificate cert;
    cert.n_max = n_max;
    OrderCache cache(s);
    std::uint64_t visited = 0;
    Integer heaviest = 0;
    for (const Point& g : s.generators())
        heaviest = std::max(heaviest, coordinate_sum(g));
    for (int n = 1; n <= n_max; ++n) {
        bool ok = true;
        Point v(static_cast<std::size_t>(s.dim()), 0);
        Integer budget = Integer(n + 1) * heaviest;
        detail::walk_box(v, 0, budget, [&](const Point& sv) {
            if (++visited > limits.max_enumeration)
                throw ResourceBound("reduction scan exceeded enumeration limit",
                                    limits.max_enumeration);
            if (!ok) return;
            if (cache.order(sv) != n + 1) return;
            for (int i = 0; i < s.dim(); ++i) {
                Point w = sub(sv, s.generators()[static_cast<std::size_t>(i)]);
                if (nonnegative(w) && cache.order(w) >= n) return;
            }
            ok = false;
        });
        if (ok) {
            cert.certified = true;
            cert.n = n;
            return cert;
        }
    }
    return cert;
}

enum class HomogeneityVerdict { Verified, Refuted, Inconclusive };

inline const char* verdict_name(HomogeneityVerdict v) {
    switch (v) {
    case HomogeneityVerdict::Verified: return "verified";
    case HomogeneityVerdict::Refuted: return "refuted";
    case HomogeneityVerdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

}  // namespace semicone
