#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"

namespace semicone {

// z^plus - z^minus, or the monomial z^plus when minus is absent. All ideals
// this library touches are generated by such pure-difference binomials and
// monomials, and that class is closed under S-pairs and reduction, so no
// general polynomial arithmetic is needed. The represented element is nonzero:
// plus == minus is collapsed to std::nullopt by the smart constructors.
struct Binomial {
    Exponents plus;
    std::optional<Exponents> minus;

    bool is_monomial() const { return !minus.has_value(); }

    bool operator==(const Binomial& o) const {
        return plus == o.plus && minus == o.minus;
    }
};

// Builds z^a - z^b oriented so that plus is the leading monomial under `o`.
// Returns nullopt for the zero element (a == b).
inline std::optional<Binomial> make_binomial(Exponents a, Exponents b,
                                             const TermOrder& o) {
    int c = compare(a, b, o);
    if (c == 0) return std::nullopt;
    if (c > 0) return Binomial{std::move(a), std::move(b)};
    return Binomial{std::move(b), std::move(a)};
}

inline Binomial make_monomial(Exponents a) {
    return Binomial{std::move(a), std::nullopt};
}

// Re-orients after a term was rewritten. Returns nullopt if the element became
// zero.
inline std::optional<Binomial> orient(Binomial f, const TermOrder& o) {
    if (f.is_monomial()) return f;
    return make_binomial(std::move(f.plus), std::move(*f.minus), o);
}

inline const Exponents& leading_monomial(const Binomial& f) { return f.plus; }

// deg(tail) - deg(lead); 0 for monomials. Nonnegative when oriented under a
// local order, where the leading monomial has minimal degree.
inline std::int64_t ecart(const Binomial& f) {
    if (f.is_monomial()) return 0;
    return total_degree(*f.minus) - total_degree(f.plus);
}

// Homogeneous under the standard grading deg z_i = 1.
inline bool is_standard_homogeneous(const Binomial& f) {
    if (f.is_monomial()) return true;
    return total_degree(f.plus) == total_degree(*f.minus);
}

// Variables appearing in either term.
inline std::vector<int> binomial_support(const Binomial& f) {
    Exponents u = f.plus;
    if (!f.is_monomial()) {
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += (*f.minus)[i];
    }
    return support(u);
}

// One reduction step of the lead of f by g, where LM(g) | LM(f):
//   f - z^(LM(f)-LM(g)) * g.
// Thanks to the +1/-1 coefficients this is an exact cancellation; the result
// is again a binomial, a monomial, or zero. The result is NOT re-oriented.
inline std::optional<Binomial> reduce_lead_step(const Binomial& f,
                                                const Binomial& g) {
    Exponents shift = mono_div(f.plus, g.plus);
    if (g.is_monomial()) {
        // f - z^shift * z^LM(g) kills the lead entirely.
        if (f.is_monomial()) return std::nullopt;
        return make_monomial(*f.minus);
    }
    Exponents replacement = mono_mul(shift, *g.minus);
    if (f.is_monomial()) return make_monomial(std::move(replacement));
    if (replacement == *f.minus) return std::nullopt;
    return Binomial{std::move(replacement), *f.minus};
}

// S-pair of two oriented elements: cancels the lcm of the leads. Result is
// un-oriented ("tail difference"); zero becomes nullopt.
inline std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g,
                                      const TermOrder& o) {
    Exponents l = mono_lcm(f.plus, g.plus);
    std::optional<Exponents> a, b;
    if (!f.is_monomial()) a = mono_mul(mono_div(l, f.plus), *f.minus);
    if (!g.is_monomial()) b = mono_mul(mono_div(l, g.plus), *g.minus);
    if (!a && !b) return std::nullopt;
    if (a && !b) return make_monomial(std::move(*a));
    if (!a && b) return make_monomial(std::move(*b));
    return make_binomial(std::move(*a), std::move(*b), o);
}

// Deterministic order for reports and set containers: leading monomial first
// (by the given order, ascending), then the tail, monomials before binomials
// with the same lead.
inline bool canonical_less(const Binomial& a, const Binomial& b,
                           const TermOrder& o) {
    int c = compare(a.plus, b.plus, o);
    if (c != 0) return c < 0;
    if (a.is_monomial() != b.is_monomial()) return a.is_monomial();
    if (a.is_monomial()) return false;
    return compare(*a.minus, *b.minus, o) < 0;
}

inline std::string binomial_string(const Binomial& f) {
    if (f.is_monomial()) return monomial_string(f.plus);
    return monomial_string(f.plus) + " - " + monomial_string(*f.minus);
}

}  // namespace semicone
