#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "binomial.hpp"
#include "ideal.hpp"
#include "numeric.hpp"

namespace semicone {

inline TermOrder local_order() { return TermOrder{OrderKind::NegDegRevLex, 0}; }

// Mora's weak normal form. NegDegRevLex is not a well-order, so plain division
// can loop; the ecart rule (pick a reducer of minimal ecart, admit the current
// intermediate as a reducer once the chosen ecart exceeds its own) restores
// termination. The remainder's lead is divisible by no LM of `basis`. When f
// lies in the ideal generated by `basis` the result is nullopt; intermediates
// stay inside that ideal because every step is an exact cancellation.
inline std::optional<Binomial> mora_normal_form(Binomial f,
                                                const std::vector<Binomial>& basis,
                                                const TermOrder& o,
                                                const Limits& limits = {}) {
    if (!o.is_local()) throw Internal("mora_normal_form requires a local order");
    std::vector<Binomial> t = basis;
    std::optional<Binomial> h = orient(std::move(f), o);
    std::uint64_t steps = 0;
    while (h) {
        const Binomial* reducer = nullptr;
        for (const Binomial& g : t) {
            if (!divides(g.plus, h->plus)) continue;
            if (!reducer || ecart(g) < ecart(*reducer)) reducer = &g;
        }
        if (!reducer) break;
        if (++steps > limits.max_reduction_steps)
            throw ResourceBound("weak normal form exceeded reduction step limit",
                                limits.max_reduction_steps);
        Binomial chosen = *reducer;  // copy: the push below may reallocate t
        if (ecart(chosen) > ecart(*h)) t.push_back(*h);
        std::optional<Binomial> next = reduce_lead_step(*h, chosen);
        if (!next) return std::nullopt;
        h = orient(std::move(*next), o);
    }
    return h;
}

// Rewrites a monomial modulo the basis using only original basis elements, so
// the result differs from the input by an exact element of the ideal (no unit
// denominators ever arise). Under the local order every step strictly
// decreases the monomial, and steps preserve semigroup degree, so this
// terminates on the toric inputs it is used for; a step cap guards the rest.
// nullopt means the monomial itself reduced into the ideal.
inline std::optional<Exponents> tail_normal_form(Exponents t,
                                                 const std::vector<Binomial>& basis,
                                                 std::size_t skip,
                                                 const Limits& limits = {}) {
    std::uint64_t steps = 0;
    while (true) {
        const Binomial* reducer = nullptr;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip) continue;
            if (divides(basis[k].plus, t)) {
                reducer = &basis[k];
                break;
            }
        }
        if (!reducer) return t;
        if (reducer->is_monomial()) return std::nullopt;
        if (++steps > limits.max_reduction_steps)
            throw ResourceBound("tail rewriting exceeded reduction step limit",
                                limits.max_reduction_steps);
        t = mono_mul(mono_div(t, reducer->plus), *reducer->minus);
    }
}

struct StandardBasisResult {
    // Minimal standard basis under NegDegRevLex: no LM divides another, tails
    // rewritten to normal form, ordered by (LM degree, revlex).
    std::vector<Binomial> basis;
    TermOrder order;
    std::vector<Exponents> leading_monomials;
    // Indices of basis elements that are (non)homogeneous for deg z_i = 1.
    std::vector<int> homogeneous;
    std::vector<int> nonhomogeneous;
    // Initial forms f* generating the tangent-cone ideal.
    std::vector<Binomial> tangent_cone;
};

// Mora's tangent-cone algorithm: the Buchberger loop with weak normal forms,
// then minimalization. The output leading-monomial set is that of any minimal
// standard basis of the input ideal, hence canonical.
inline StandardBasisResult standard_basis(const std::vector<Binomial>& gens,
                                          const Limits& limits = {}) {
    TermOrder o = local_order();
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
        std::optional<Binomial> s = s_pair(g[i], g[j], o);
        if (!s) continue;
        std::optional<Binomial> h = mora_normal_form(std::move(*s), g, o, limits);
        if (!h) continue;
        g.push_back(std::move(*h));
        if (g.size() > limits.max_basis_elements)
            throw ResourceBound("standard basis exceeded element limit",
                                limits.max_basis_elements);
        add_pairs(static_cast<int>(g.size()) - 1);
    }

    // Minimalize: (LM degree, revlex) order puts potential divisors first.
    std::sort(g.begin(), g.end(), [&](const Binomial& a, const Binomial& b) {
        return canonical_less(b, a, o);
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
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        if (minimal[i].is_monomial()) continue;
        std::optional<Exponents> t =
            tail_normal_form(*minimal[i].minus, minimal, i, limits);
        if (!t) {
            minimal[i].minus.reset();
        } else {
            minimal[i].minus = std::move(*t);
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Binomial& a, const Binomial& b) {
                  return canonical_less(b, a, o);
              });

    StandardBasisResult r;
    r.order = o;
    r.basis = std::move(minimal);
    for (std::size_t i = 0; i < r.basis.size(); ++i) {
        r.leading_monomials.push_back(r.basis[i].plus);
        if (is_standard_homogeneous(r.basis[i])) {
            r.homogeneous.push_back(static_cast<int>(i));
            r.tangent_cone.push_back(r.basis[i]);
        } else {
            r.nonhomogeneous.push_back(static_cast<int>(i));
            r.tangent_cone.push_back(make_monomial(r.basis[i].plus));
        }
    }
    return r;
}

struct CmCheck {
    bool graded_ring_cm = false;
    // (variable index j < d, basis index i) with z_{j+1} dividing LM(f_i).
    std::vector<std::pair<int, int>> offending;
};

// Lead-divisibility criterion: the associated graded ring of the semigroup
// algebra is Cohen-Macaulay iff no extremal variable z_1..z_d divides any
// leading monomial of the minimal standard basis.
inline CmCheck cm_check(const StandardBasisResult& sb, int d) {
    CmCheck c;
    for (std::size_t i = 0; i < sb.basis.size(); ++i) {
        const Exponents& lm = sb.basis[i].plus;
        for (int j = 0; j < d && j < static_cast<int>(lm.size()); ++j) {
            if (lm[j] > 0) c.offending.push_back({j, static_cast<int>(i)});
        }
    }
    c.graded_ring_cm = c.offending.empty();
    return c;
}

struct GbSupportWitness {
    bool witnessed = false;
    int witness_variable = -1;  // 0-based index among z_1..z_d
    std::vector<int> nonhomogeneous;
};

// Support condition of the homogeneity characterization: some extremal
// variable z_j (j <= d) appears in every non-homogeneous basis element.
// Vacuously witnessed when the basis is homogeneous (witness_variable -1).
inline GbSupportWitness gb_support_witness(const StandardBasisResult& sb, int d) {
    GbSupportWitness w;
    w.nonhomogeneous = sb.nonhomogeneous;
    if (w.nonhomogeneous.empty()) {
        w.witnessed = true;
        return w;
    }
    for (int j = 0; j < d; ++j) {
        bool all = true;
        for (int i : w.nonhomogeneous) {
            Exponents u = sb.basis[i].plus;
            if (!sb.basis[i].is_monomial()) {
                for (std::size_t k = 0; k < u.size(); ++k)
                    u[k] += (*sb.basis[i].minus)[k];
            }
            if (static_cast<std::size_t>(j) >= u.size() || u[j] == 0) {
                all = false;
                break;
            }
        }
        if (all) {
            w.witnessed = true;
            w.witness_variable = j;
            return w;
        }
    }
    return w;
}

// Substitute z_1 = ... = z_i = 0 into every basis element. Terms hit by a
// killed variable vanish; the precondition keeps every lead alive, which is
// what makes the image a Groebner basis of the projected ideal.
inline std::vector<Binomial> project_basis(const StandardBasisResult& sb, int i) {
    auto killed = [&](const Exponents& m) {
        for (int j = 0; j < i && j < static_cast<int>(m.size()); ++j) {
            if (m[j] > 0) return true;
        }
        return false;
    };
    std::vector<Binomial> out;
    for (const Binomial& f : sb.basis) {
        if (killed(f.plus))
            throw InvalidInput(InvalidInput::Kind::PreconditionViolated,
                               "leading monomial " + monomial_string(f.plus) +
                                   " vanishes under the projection");
        if (!f.is_monomial() && killed(*f.minus)) {
            out.push_back(make_monomial(f.plus));
        } else {
            out.push_back(f);
        }
    }
    return out;
}

}  // namespace semicone
