#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "monomial.hpp"
#include "numeric.hpp"

namespace semicone {

// One way of writing an element as an NN-combination of the generators.
// multiplicities[i] refers to generators()[i]; length is their sum.
struct Factorization {
    std::vector<std::int64_t> multiplicities;
    std::int64_t length = 0;

    bool operator==(const Factorization& o) const {
        return multiplicities == o.multiplicities;
    }
};

// A finitely generated subsemigroup of NN^d whose rational cone is simplicial:
// full rank d with exactly d extremal rays. Generators are stored in a
// canonical order: the d extremal elements sorted lexicographically, then the
// remaining generators sorted lexicographically. The generator list must be
// minimal; construction rejects anything else.
class AffineSemigroup {
public:
    static AffineSemigroup create(int dim, std::vector<Point> generators) {
        AffineSemigroup s;
        s.dim_ = dim;
        if (dim <= 0)
            throw InvalidInput(InvalidInput::Kind::Malformed, "dim must be positive");
        if (generators.empty())
            throw InvalidInput(InvalidInput::Kind::Malformed, "no generators given");
        for (const Point& g : generators) {
            check_same_length(g.size(), static_cast<std::size_t>(dim), "generator");
            if (!nonnegative(g))
                throw InvalidInput(InvalidInput::Kind::Malformed,
                                   "generators must be nonnegative");
            if (is_zero(g))
                throw InvalidInput(InvalidInput::Kind::ZeroGenerator,
                                   "zero vector is not allowed as a generator");
        }
        {
            std::set<Point> seen;
            for (const Point& g : generators) {
                if (!seen.insert(g).second)
                    throw InvalidInput(InvalidInput::Kind::DuplicateGenerator,
                                       "duplicate generator " + point_string(g));
            }
        }

        // Simpliciality: rank d and exactly d extremal rays. Generators on a
        // common ray share a primitive direction; a ray is extremal iff its
        // direction lies outside the cone of all other rays.
        {
            IntMatrix m;
            for (const Point& g : generators) m.push_back(g);
            if (matrix_rank(m) != dim)
                throw NotSimplicial("generator cone has dimension below " +
                                    std::to_string(dim));
        }
        std::map<Point, std::vector<Point>> ray_classes;
        for (const Point& g : generators)
            ray_classes[primitive_direction(g)].push_back(g);
        std::vector<Point> extremal;
        for (const auto& [dir, members] : ray_classes) {
            std::vector<Point> others;
            for (const auto& [dir2, members2] : ray_classes) {
                if (dir2 == dir) continue;
                others.insert(others.end(), members2.begin(), members2.end());
            }
            if (!cone_contains(others, dir)) {
                // Extremal ray; its smallest semigroup element is the smallest
                // generator on the ray.
                Point least = members.front();
                for (const Point& p : members) {
                    if (coordinate_sum(p) < coordinate_sum(least)) least = p;
                }
                extremal.push_back(least);
            }
        }
        if (static_cast<int>(extremal.size()) != dim)
            throw NotSimplicial("generator cone has " +
                                std::to_string(extremal.size()) +
                                " extremal rays, expected " + std::to_string(dim));

        std::sort(extremal.begin(), extremal.end());
        std::vector<Point> rest;
        std::set<Point> extremal_set(extremal.begin(), extremal.end());
        for (const Point& g : generators) {
            if (!extremal_set.count(g)) rest.push_back(g);
        }
        std::sort(rest.begin(), rest.end());
        s.gens_ = extremal;
        s.gens_.insert(s.gens_.end(), rest.begin(), rest.end());

        // Search order for the factorization walk: heaviest generator first.
        s.search_order_.resize(s.gens_.size());
        for (std::size_t i = 0; i < s.gens_.size(); ++i) s.search_order_[i] = i;
        std::sort(s.search_order_.begin(), s.search_order_.end(),
                  [&](std::size_t a, std::size_t b) {
                      Integer sa = coordinate_sum(s.gens_[a]);
                      Integer sb = coordinate_sum(s.gens_[b]);
                      if (sa != sb) return sa > sb;
                      return s.gens_[a] > s.gens_[b];
                  });

        // Minimality: no generator may lie in the semigroup of the others.
        for (std::size_t i = 0; i < s.gens_.size(); ++i) {
            std::vector<Point> others;
            for (std::size_t j = 0; j < s.gens_.size(); ++j) {
                if (j != i) others.push_back(s.gens_[j]);
            }
            if (generated_contains(others, s.gens_[i]))
                throw InvalidInput(InvalidInput::Kind::NonMinimalGenerator,
                                   "generator " + point_string(s.gens_[i]) +
                                       " is a combination of the others");
        }
        return s;
    }

    int dim() const { return dim_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    const std::vector<Point>& generators() const { return gens_; }

    // The d extremal elements, one per extremal ray.
    std::vector<Point> extremal_rays() const {
        return std::vector<Point>(gens_.begin(), gens_.begin() + dim_);
    }

    Point evaluate(const std::vector<std::int64_t>& multiplicities) const {
        check_same_length(multiplicities.size(), gens_.size(), "evaluate");
        Point p(dim_, 0);
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (multiplicities[i] < 0)
                throw InvalidInput(InvalidInput::Kind::Malformed,
                                   "negative multiplicity");
            if (multiplicities[i] != 0)
                p = add(p, scale(multiplicities[i], gens_[i]));
        }
        return p;
    }

    bool contains(const Point& v) const {
        check_same_length(v.size(), static_cast<std::size_t>(dim_), "contains");
        if (!nonnegative(v)) return false;
        return generated_contains(gens_, v);
    }

    // All factorizations, sorted by multiplicity vector. Throws when v is not
    // in the semigroup.
    std::vector<Factorization> factorizations(const Point& v) const {
        check_same_length(v.size(), static_cast<std::size_t>(dim_), "factorizations");
        std::vector<Factorization> out;
        if (nonnegative(v)) {
            std::vector<std::int64_t> current(gens_.size(), 0);
            enumerate(v, 0, current, out);
        }
        if (out.empty())
            throw InvalidInput(InvalidInput::Kind::NotInSemigroup,
                               point_string(v) + " is not in the semigroup");
        std::sort(out.begin(), out.end(),
                  [](const Factorization& a, const Factorization& b) {
                      return a.multiplicities < b.multiplicities;
                  });
        return out;
    }

    // ord(v): the maximal factorization length.
    std::int64_t order(const Point& v) const {
        std::int64_t best = -1;
        for (const Factorization& f : factorizations(v)) {
            best = std::max(best, f.length);
        }
        return best;
    }

    // All factorization lengths of v.
    std::set<std::int64_t> length_set(const Point& v) const {
        std::set<std::int64_t> ls;
        for (const Factorization& f : factorizations(v)) ls.insert(f.length);
        return ls;
    }

    static std::string point_string(const Point& p) {
        std::string s = "(";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) s += ",";
            s += p[i].str();
        }
        return s + ")";
    }

    // Empty placeholder so aggregates can hold a semigroup before assignment;
    // every populated instance comes from create().
    AffineSemigroup() = default;

private:

    // Bounded depth-first walk over multiplicity vectors: generators are tried
    // heaviest-first, each coordinate bound caps the branching, and a residual
    // coordinate no remaining generator can reach prunes the branch.
    static bool generated_contains(const std::vector<Point>& gens, const Point& v) {
        return walk(gens, sorted_by_weight(gens), v, 0);
    }

    static std::vector<std::size_t> sorted_by_weight(const std::vector<Point>& gens) {
        std::vector<std::size_t> idx(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            Integer sa = coordinate_sum(gens[a]);
            Integer sb = coordinate_sum(gens[b]);
            if (sa != sb) return sa > sb;
            return gens[a] > gens[b];
        });
        return idx;
    }

    static bool walk(const std::vector<Point>& gens,
                     const std::vector<std::size_t>& order, const Point& v,
                     std::size_t k) {
        if (is_zero(v)) return true;
        if (k == order.size()) return false;
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (v[c] == 0) continue;
            bool reachable = false;
            for (std::size_t j = k; j < order.size(); ++j) {
                if (gens[order[j]][c] > 0) {
                    reachable = true;
                    break;
                }
            }
            if (!reachable) return false;
        }
        const Point& g = gens[order[k]];
        Integer bound = max_multiple(g, v);
        Point rest = v;
        for (Integer r = 0; r <= bound; ++r) {
            if (walk(gens, order, rest, k + 1)) return true;
            rest = sub(rest, g);
        }
        return false;
    }

    static Integer max_multiple(const Point& g, const Point& v) {
        Integer bound = -1;
        for (std::size_t c = 0; c < g.size(); ++c) {
            if (g[c] == 0) continue;
            Integer b = v[c] / g[c];
            if (bound < 0 || b < bound) bound = b;
        }
        return bound < 0 ? Integer(0) : bound;
    }

    void enumerate(const Point& v, std::size_t k, std::vector<std::int64_t>& current,
                   std::vector<Factorization>& out) const {
        if (k == search_order_.size()) {
            if (is_zero(v)) {
                Factorization f;
                f.multiplicities = current;
                for (std::int64_t m : current) f.length += m;
                out.push_back(std::move(f));
            }
            return;
        }
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (v[c] == 0) continue;
            bool reachable = false;
            for (std::size_t j = k; j < search_order_.size(); ++j) {
                if (gens_[search_order_[j]][c] > 0) {
                    reachable = true;
                    break;
                }
            }
            if (!reachable) return;
        }
        std::size_t gi = search_order_[k];
        const Point& g = gens_[gi];
        Integer bound = max_multiple(g, v);
        if (bound > Integer(std::numeric_limits<std::int64_t>::max()))
            throw Internal("factorization multiplicity exceeds int64");
        Point rest = v;
        for (Integer r = 0; r <= bound; ++r) {
            current[gi] = static_cast<std::int64_t>(r);
            enumerate(rest, k + 1, current, out);
            rest = sub(rest, g);
        }
        current[gi] = 0;
    }

    int dim_ = 0;
    std::vector<Point> gens_;
    std::vector<std::size_t> search_order_;
};

}  // namespace semicone
