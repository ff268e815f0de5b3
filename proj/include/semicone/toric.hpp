#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ideal.hpp"
#include "linalg.hpp"
#include "semigroup.hpp"

namespace semicone {

// Sum of m_i * a_i: the semigroup degree of the monomial z^m.
inline Point s_degree(const Exponents& m, const AffineSemigroup& s) {
    check_same_length(m.size(), s.generators().size(), "s_degree");
    Point p(s.dim(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) throw Internal("negative exponent in s_degree");
        if (m[i] != 0) p = add(p, scale(m[i], s.generators()[i]));
    }
    return p;
}

// A binomial lies in the toric ideal iff both terms have equal S-degree.
inline bool s_degree_balanced(const Binomial& f, const AffineSemigroup& s) {
    if (f.is_monomial()) return false;
    return s_degree(f.plus, s) == s_degree(*f.minus, s);
}

// Basis of the integer kernel of the d x n matrix whose columns are the
// generators; the source of the toric ideal. LLL keeps the basis vectors
// short, which keeps the seed binomials and the saturation cheap.
inline std::vector<std::vector<Integer>> lattice_kernel(
    const std::vector<Point>& generators) {
    if (generators.empty()) return {};
    std::size_t d = generators.front().size();
    IntMatrix m(d, std::vector<Integer>(generators.size()));
    for (std::size_t j = 0; j < generators.size(); ++j) {
        check_same_length(generators[j].size(), d, "lattice_kernel");
        for (std::size_t i = 0; i < d; ++i) m[i][j] = generators[j][i];
    }
    std::vector<std::vector<Integer>> kernel = integer_kernel(m);
    lll_reduce(kernel);
    return kernel;
}

namespace detail {

// Strips the common monomial factor of the two terms. Sound during
// saturation: the stripped element lies in the saturation of the ideal.
inline Binomial strip_content(Binomial f) {
    if (f.is_monomial()) return f;
    Exponents g = mono_gcd(f.plus, *f.minus);
    if (total_degree(g) == 0) return f;
    return Binomial{mono_div(f.plus, g), mono_div(*f.minus, g)};
}

// (J : z_var^infinity) via the auxiliary variable t: append t with highest
// priority, adjoin t*z_var - 1, eliminate t, intersect with the original ring.
inline std::vector<Binomial> saturate_variable(const std::vector<Binomial>& j,
                                               std::size_t var, std::size_t nvars,
                                               const Limits& limits) {
    TermOrder elim{OrderKind::DegRevLex, 1};
    std::vector<Binomial> lifted;
    for (const Binomial& f : j) {
        Exponents p = f.plus;
        p.push_back(0);
        if (f.is_monomial()) {
            lifted.push_back(make_monomial(std::move(p)));
        } else {
            Exponents q = *f.minus;
            q.push_back(0);
            lifted.push_back(Binomial{std::move(p), std::move(q)});
        }
    }
    Exponents tz(nvars + 1, 0);
    tz[var] = 1;
    tz[nvars] = 1;
    lifted.push_back(Binomial{std::move(tz), Exponents(nvars + 1, 0)});

    std::vector<Binomial> out;
    for (const Binomial& f : reduced_groebner_basis(lifted, elim, limits)) {
        if (f.plus[nvars] != 0) continue;
        if (!f.is_monomial() && (*f.minus)[nvars] != 0)
            throw Internal("eliminated lead with t in the tail");
        Exponents p(f.plus.begin(), f.plus.end() - 1);
        if (f.is_monomial()) {
            out.push_back(make_monomial(std::move(p)));
        } else {
            Exponents q(f.minus->begin(), f.minus->end() - 1);
            out.push_back(strip_content(Binomial{std::move(p), std::move(q)}));
        }
    }
    return out;
}

}  // namespace detail

// Reduced Groebner basis of the defining toric ideal I(S) under a global
// order: lattice-kernel binomials saturated by every variable in turn.
inline std::vector<Binomial> toric_groebner(const AffineSemigroup& s,
                                            const TermOrder& o,
                                            const Limits& limits = {}) {
    if (!o.is_global()) throw Internal("toric_groebner requires a global order");
    std::size_t n = s.generators().size();
    std::vector<Binomial> j;
    TermOrder drl{OrderKind::DegRevLex, 0};
    for (const std::vector<Integer>& u : lattice_kernel(s.generators())) {
        Exponents plus(n, 0), minus(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] > Integer(std::numeric_limits<std::int64_t>::max()) ||
                -u[i] > Integer(std::numeric_limits<std::int64_t>::max()))
                throw Internal("kernel entry exceeds int64 exponent range");
            std::int64_t e = static_cast<std::int64_t>(u[i]);
            if (e > 0) plus[i] = e;
            if (e < 0) minus[i] = -e;
        }
        std::optional<Binomial> f =
            make_binomial(std::move(plus), std::move(minus), drl);
        if (f) j.push_back(detail::strip_content(std::move(*f)));
    }
    for (std::size_t var = 0; var < n; ++var) {
        j = detail::saturate_variable(j, var, n, limits);
    }
    std::vector<Binomial> g = reduced_groebner_basis(j, o, limits);
    for (const Binomial& f : g) {
        if (!s_degree_balanced(f, s))
            throw Internal("toric basis element is not S-degree balanced");
    }
    return g;
}

// Minimal binomial generating set of I(S): the reduced degrevlex basis pruned
// of elements lying in the ideal of the others. The semigroup grading is
// positive, so a single greedy pass yields a minimal generating set.
inline std::vector<Binomial> toric_ideal(const AffineSemigroup& s,
                                         const Limits& limits = {}) {
    TermOrder drl{OrderKind::DegRevLex, 0};
    std::vector<Binomial> g = toric_groebner(s, drl, limits);
    std::vector<Binomial> kept;
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::vector<Binomial> others = kept;
        others.insert(others.end(), g.begin() + i + 1, g.end());
        if (others.empty()) {
            kept.push_back(g[i]);
            continue;
        }
        std::vector<Binomial> gb = reduced_groebner_basis(others, drl, limits);
        if (normal_form(g[i], gb, drl, limits)) kept.push_back(g[i]);
    }
    return kept;
}

struct GastingerCheck {
    bool matches = false;
    // Expected dimension: the chosen generator a_i.
    Integer expected;
    // Count of standard monomials of J + (z_i); absent when infinite.
    std::optional<std::uint64_t> dimension;
    bool infinite_dimensional = false;
    std::string note;
};

// Finite-codimension test certifying J = I(S) for a numerical semigroup:
// J subseteq I(S) equals it iff dim_k A/(J + (z_i)) meets the generator a_i.
inline GastingerCheck gastinger_check(const std::vector<Binomial>& j,
                                      const AffineSemigroup& s, int i,
                                      const Limits& limits = {}) {
    if (s.dim() != 1)
        throw InvalidInput(InvalidInput::Kind::NotNumerical,
                           "dimension check requires a numerical semigroup");
    Integer g = 0;
    for (const Point& a : s.generators()) g = boost::multiprecision::gcd(g, a[0]);
    if (g != 1)
        throw InvalidInput(InvalidInput::Kind::NotNumerical,
                           "generators have gcd " + g.str() + ", expected 1");
    if (i < 0 || i >= s.generator_count())
        throw InvalidInput(InvalidInput::Kind::Malformed,
                           "generator index out of range");
    for (const Binomial& f : j) {
        if (!s_degree_balanced(f, s))
            throw InvalidInput(InvalidInput::Kind::PreconditionViolated,
                               binomial_string(f) + " is not in the toric ideal");
    }
    GastingerCheck result;
    result.expected = s.generators()[i][0];

    std::size_t n = s.generators().size();
    std::vector<Binomial> gens = j;
    gens.push_back(make_monomial(unit_exponent(n, static_cast<std::size_t>(i))));
    TermOrder drl{OrderKind::DegRevLex, 0};
    std::vector<Binomial> gb = reduced_groebner_basis(gens, drl, limits);
    StandardMonomials sm = standard_monomials(gb, n, limits);
    if (!sm.finite) {
        result.infinite_dimensional = true;
        result.matches = false;
        result.note = "quotient by J + (z_" + std::to_string(i + 1) +
                      ") is infinite dimensional; J cannot equal the toric ideal";
        return result;
    }
    result.dimension = sm.monomials.size();
    result.matches = Integer(sm.monomials.size()) == result.expected;
    if (!result.matches)
        result.note = "dimension " + std::to_string(sm.monomials.size()) +
                      " differs from expected " + result.expected.str();
    return result;
}

}  // namespace semicone
