#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "binomial.hpp"
#include "numeric.hpp"

namespace semicone {

// Full normal form under a GLOBAL order: reduce the lead until irreducible,
// then the tail. Each rewrite is an exact cancellation, so the class of
// {0, monomial, pure-difference binomial} is preserved. For local orders use
// mora_normal_form instead; this loop relies on the well-ordering.
inline std::optional<Binomial> normal_form(Binomial f,
                                           const std::vector<Binomial>& basis,
                                           const TermOrder& o,
                                           const Limits& limits = {}) {
    if (!o.is_global()) throw Internal("normal_form requires a global order");
    std::uint64_t steps = 0;
    auto bump = [&] {
        if (++steps > limits.max_reduction_steps)
            throw ResourceBound("normal form exceeded reduction step limit",
                                limits.max_reduction_steps);
    };
    std::optional<Binomial> h = orient(std::move(f), o);
    while (h) {
        const Binomial* reducer = nullptr;
        for (const Binomial& g : basis) {
            if (divides(g.plus, h->plus)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) break;
        bump();
        std::optional<Binomial> next = reduce_lead_step(*h, *reducer);
        if (!next) return std::nullopt;
        h = orient(std::move(*next), o);
    }
    if (!h || h->is_monomial()) return h;
    // Tail reduction; under a global order the tail strictly drops, so the
    // orientation is preserved.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Binomial& g : basis) {
            if (!divides(g.plus, *h->minus)) continue;
            bump();
            changed = true;
            if (g.is_monomial()) {
                h->minus.reset();
            } else {
                Exponents repl = mono_mul(mono_div(*h->minus, g.plus), *g.minus);
                if (repl == h->plus) return std::nullopt;
                h->minus = std::move(repl);
            }
            break;
        }
        if (h->is_monomial()) break;
    }
    return h;
}

// Buchberger's algorithm with normal pair selection (lcm degree, then entry
// indices) and the coprime-lead criterion. Input and output are binomials;
// the output is a Groebner basis, not yet reduced.
inline std::vector<Binomial> buchberger(const std::vector<Binomial>& gens,
                                        const TermOrder& o,
                                        const Limits& limits = {}) {
    if (!o.is_global()) throw Internal("buchberger requires a global order");
    std::vector<Binomial> g;
    for (const Binomial& f : gens) {
        std::optional<Binomial> h = orient(f, o);
        if (h) g.push_back(std::move(*h));
    }
    std::set<std::tuple<std::int64_t, int, int>> pairs;
    auto add_pairs = [&](int t) {
        for (int i = 0; i < t; ++i) {
            Exponents l = mono_lcm(g[i].plus, g[t].plus);
            pairs.insert({total_degree(l), i, t});
        }
    };
    for (int t = 1; t < static_cast<int>(g.size()); ++t) add_pairs(t);

    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        if (coprime(g[i].plus, g[j].plus)) continue;
        std::optional<Binomial> s = s_pair(g[i], g[j], o);
        if (!s) continue;
        std::optional<Binomial> h = normal_form(std::move(*s), g, o, limits);
        if (!h) continue;
        g.push_back(std::move(*h));
        if (g.size() > limits.max_basis_elements)
            throw ResourceBound("Groebner basis exceeded element limit",
                                limits.max_basis_elements);
        add_pairs(static_cast<int>(g.size()) - 1);
    }
    return g;
}

// The unique reduced Groebner basis: minimal leads, fully reduced tails,
// sorted by leading monomial ascending.
inline std::vector<Binomial> reduced_groebner_basis(
    const std::vector<Binomial>& gens, const TermOrder& o,
    const Limits& limits = {}) {
    std::vector<Binomial> g = buchberger(gens, o, limits);
    std::sort(g.begin(), g.end(),
              [&](const Binomial& a, const Binomial& b) {
                  return canonical_less(a, b, o);
              });
    std::vector<Binomial> minimal;
    for (const Binomial& f : g) {
        bool redundant = false;
        for (const Binomial& kept : minimal) {
            if (divides(kept.plus, f.plus)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(f);
    }
    std::vector<Binomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Binomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        std::optional<Binomial> h = normal_form(minimal[i], others, o, limits);
        if (!h || h->plus != minimal[i].plus)
            throw Internal("reduced basis lost a lead");
        reduced.push_back(std::move(*h));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Binomial& a, const Binomial& b) {
                  return canonical_less(a, b, o);
              });
    return reduced;
}

// Minimal generators of the monomial ideal spanned by the given monomials.
inline std::vector<Exponents> minimal_monomial_generators(
    std::vector<Exponents> monomials) {
    std::sort(monomials.begin(), monomials.end(),
              [](const Exponents& a, const Exponents& b) {
                  std::int64_t da = total_degree(a), db = total_degree(b);
                  if (da != db) return da < db;
                  return a < b;
              });
    std::vector<Exponents> out;
    for (const Exponents& m : monomials) {
        bool redundant = false;
        for (const Exponents& kept : out) {
            if (divides(kept, m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(m);
    }
    return out;
}

struct StandardMonomials {
    bool finite = false;
    // Monomials outside the leading ideal, lexicographically ascending by
    // exponent tuple; empty when infinite.
    std::vector<Exponents> monomials;
};

// Monomial basis of the quotient by the leading ideal of a Groebner basis.
// Finite iff every variable has a pure power among the leads.
inline StandardMonomials standard_monomials(const std::vector<Binomial>& groebner,
                                            std::size_t nvars,
                                            const Limits& limits = {}) {
    std::vector<Exponents> leads;
    for (const Binomial& f : groebner) leads.push_back(f.plus);
    leads = minimal_monomial_generators(std::move(leads));

    StandardMonomials result;
    for (const Exponents& l : leads) {
        if (total_degree(l) == 0) {
            // Unit ideal: no standard monomials at all.
            result.finite = true;
            return result;
        }
    }
    std::vector<bool> pure(nvars, false);
    for (const Exponents& l : leads) {
        std::vector<int> s = support(l);
        if (s.size() == 1) pure[s[0]] = true;
    }
    for (std::size_t i = 0; i < nvars; ++i) {
        if (!pure[i]) {
            result.finite = false;
            return result;
        }
    }
    result.finite = true;

    Exponents current(nvars, 0);
    auto divisible = [&](const Exponents& m) {
        for (const Exponents& l : leads) {
            if (divides(l, m)) return true;
        }
        return false;
    };
    // DFS in lexicographic order; since each variable has a pure power in the
    // leading ideal, every exponent loop terminates.
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == nvars) {
            if (result.monomials.size() >= limits.max_standard_monomials)
                throw ResourceBound("standard monomial count exceeded limit",
                                    limits.max_standard_monomials);
            result.monomials.push_back(current);
            return;
        }
        for (std::int64_t e = 0;; ++e) {
            current[i] = e;
            if (e > 0 && divisible(current)) break;
            self(self, i + 1);
        }
        current[i] = 0;
    };
    if (!divisible(current)) rec(rec, 0);
    return result;
}

}  // namespace semicone
