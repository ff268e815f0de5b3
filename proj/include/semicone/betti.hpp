#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "apery.hpp"
#include "homology.hpp"
#include "ideal.hpp"
#include "mora.hpp"
#include "toric.hpp"

namespace semicone {

// Fine-graded Betti numbers of the semigroup algebra k[S]; degrees live in S.
struct FineBettiTable {
    std::map<std::pair<int, Point>, std::int64_t> entries;  // nonzero ranks only
    std::vector<std::int64_t> totals;                       // beta_0, beta_1, ...
};

// Standard-graded Betti numbers of A/I; degrees are total degrees.
struct GradedBettiTable {
    std::map<std::pair<int, std::int64_t>, std::int64_t> entries;
    std::vector<std::int64_t> totals;
};

namespace detail {

inline void trim_totals(std::vector<std::int64_t>& t) {
    while (!t.empty() && t.back() == 0) t.pop_back();
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

// beta_{i,b}(k[S]) = rank of reduced homology H~_{i-1} of the squarefree
// divisor complex at b. Candidate degrees: S-degrees of lcms of subsets of
// the minimal leading-ideal generators of I(S) (the Taylor complex of the
// leading ideal bounds the resolution degrees by upper semicontinuity).
inline FineBettiTable betti_semigroup(const AffineSemigroup& s,
                                      const Limits& limits = {}) {
    TermOrder drl{OrderKind::DegRevLex, 0};
    std::vector<Binomial> gb = toric_groebner(s, drl, limits);
    std::vector<Exponents> leads;
    for (const Binomial& f : gb) leads.push_back(f.plus);
    leads = minimal_monomial_generators(std::move(leads));
    if (static_cast<int>(leads.size()) > limits.max_taylor_generators)
        throw ResourceBound("leading ideal too large for subset enumeration",
                            static_cast<std::uint64_t>(limits.max_taylor_generators));

    std::set<Point> candidates;
    std::size_t t = leads.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << t); ++mask) {
        Exponents l(s.generators().size(), 0);
        for (std::size_t j = 0; j < t; ++j) {
            if (mask & (std::uint64_t(1) << j)) l = mono_lcm(l, leads[j]);
        }
        candidates.insert(s_degree(l, s));
    }

    OrderCache cache(s);
    FineBettiTable table;
    for (const Point& b : candidates) {
        SimplicialComplex k = divisor_complex_with(
            s, b, [&](const Point& v) { return cache.contains(v); });
        std::vector<std::int64_t> h = reduced_homology_ranks(k);
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (h[i] == 0) continue;
            table.entries[{static_cast<int>(i), b}] = h[i];
            if (table.totals.size() <= i) table.totals.resize(i + 1, 0);
            table.totals[i] += h[i];
        }
    }
    detail::trim_totals(table.totals);
    if (table.totals.empty() || table.totals[0] != 1)
        throw Internal("fine Betti engine lost beta_0 = 1");

    // Cross-check the first syzygy row against the minimal toric generators.
    std::map<Point, std::int64_t> expected;
    for (const Binomial& f : toric_ideal(s, limits))
        expected[s_degree(f.plus, s)] += 1;
    std::map<Point, std::int64_t> got;
    for (const auto& [key, rank] : table.entries) {
        if (key.first == 1) got[key.second] = rank;
    }
    if (expected != got)
        throw Internal("beta_1 degrees disagree with minimal toric generators");
    return table;
}

// Minimal generating subset of homogeneous binomial/monomial generators,
// pruned by ideal membership of each against the rest (valid under any
// positive grading by the graded Nakayama argument).
inline std::vector<Binomial> minimalize_homogeneous(std::vector<Binomial> gens,
                                                    const Limits& limits = {}) {
    TermOrder drl{OrderKind::DegRevLex, 0};
    std::sort(gens.begin(), gens.end(), [&](const Binomial& a, const Binomial& b) {
        std::int64_t da = total_degree(a.plus), db = total_degree(b.plus);
        if (da != db) return da < db;
        return canonical_less(a, b, drl);
    });
    std::vector<Binomial> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Binomial> others = kept;
        others.insert(others.end(), gens.begin() + i + 1, gens.end());
        if (others.empty()) {
            kept.push_back(gens[i]);
            continue;
        }
        std::vector<Binomial> gb = reduced_groebner_basis(others, drl, limits);
        if (normal_form(gens[i], gb, drl, limits)) kept.push_back(gens[i]);
    }
    return kept;
}

// Graded Betti numbers of A/I for a homogeneous binomial ideal, through the
// Koszul complex on all variables tensored with the monomial basis of A/I,
// degree by degree up to the Taylor bound of the leading ideal.
inline GradedBettiTable betti_standard_graded(const std::vector<Binomial>& gens_in,
                                              std::size_t nvars,
                                              const Limits& limits = {}) {
    for (const Binomial& f : gens_in) {
        check_same_length(f.plus.size(), nvars, "betti generator");
        if (!is_standard_homogeneous(f))
            throw InvalidInput(InvalidInput::Kind::NonHomogeneousInput,
                               binomial_string(f) + " is not homogeneous");
    }
    std::vector<Binomial> minimal = minimalize_homogeneous(gens_in, limits);
    TermOrder drl{OrderKind::DegRevLex, 0};
    std::vector<Binomial> gb = reduced_groebner_basis(minimal, drl, limits);
    std::vector<Exponents> leads;
    for (const Binomial& f : gb) leads.push_back(f.plus);
    leads = minimal_monomial_generators(std::move(leads));
    Exponents big(nvars, 0);
    for (const Exponents& l : leads) big = mono_lcm(big, l);
    std::int64_t dmax = total_degree(big);

    // Monomial bases of (A/I)_t for t <= dmax, as sorted exponent lists.
    auto in_leading = [&](const Exponents& m) {
        for (const Exponents& l : leads) {
            if (divides(l, m)) return true;
        }
        return false;
    };
    std::vector<std::vector<Exponents>> basis(dmax + 1);
    std::vector<std::map<Exponents, std::size_t>> basis_index(dmax + 1);
    {
        Exponents cur(nvars, 0);
        auto rec = [&](auto&& self, std::size_t var, std::int64_t left) -> void {
            if (var + 1 == nvars) {
                cur[var] = left;
                if (!in_leading(cur)) {
                    std::int64_t t = total_degree(cur);
                    basis_index[t][cur] = basis[t].size();
                    basis[t].push_back(cur);
                }
                cur[var] = 0;
                return;
            }
            for (std::int64_t e = 0; e <= left; ++e) {
                cur[var] = e;
                self(self, var + 1, left - e);
            }
            cur[var] = 0;
        };
        for (std::int64_t t = 0; t <= dmax; ++t) {
            if (nvars == 0) break;
            rec(rec, 0, t);
            if (basis[t].size() > limits.max_standard_monomials)
                throw ResourceBound("graded slice exceeds monomial limit",
                                    limits.max_standard_monomials);
        }
    }

    // z_l * m in A/I: a single monomial or zero, since reductions by
    // pure-difference binomials replace one monomial by another.
    auto multiply = [&](std::size_t l, const Exponents& m) -> std::optional<Exponents> {
        Exponents p = m;
        p[l] += 1;
        std::optional<Binomial> nf = normal_form(make_monomial(p), gb, drl, limits);
        if (!nf) return std::nullopt;
        if (!nf->is_monomial()) throw Internal("monomial normal form not a monomial");
        return nf->plus;
    };

    int n = static_cast<int>(nvars);
    std::vector<std::vector<std::vector<int>>> subsets(n + 1);
    for (int i = 0; i <= n; ++i) subsets[i] = detail::subsets_of_size(n, i);

    // rank of the Koszul differential (K_i tensor A/I)_j -> (K_{i-1} ...)_j
    auto rank_of = [&](int i, std::int64_t j) -> std::int64_t {
        if (i < 1 || i > n) return 0;
        std::int64_t src_deg = j - i, dst_deg = j - i + 1;
        if (src_deg < 0 || src_deg > dmax || dst_deg > dmax) return 0;
        const auto& src_f = subsets[i];
        const auto& dst_f = subsets[i - 1];
        const auto& src_m = basis[src_deg];
        const auto& dst_m = basis[dst_deg];
        if (src_f.empty() || src_m.empty() || dst_m.empty()) return 0;
        std::map<std::vector<int>, std::size_t> dst_findex;
        for (std::size_t f = 0; f < dst_f.size(); ++f) dst_findex[dst_f[f]] = f;
        IntMatrix mat(dst_f.size() * dst_m.size(),
                      std::vector<Integer>(src_f.size() * src_m.size(), 0));
        for (std::size_t fi = 0; fi < src_f.size(); ++fi) {
            const std::vector<int>& f = src_f[fi];
            for (std::size_t mi = 0; mi < src_m.size(); ++mi) {
                std::size_t col = fi * src_m.size() + mi;
                int sign = 1;
                for (std::size_t drop = 0; drop < f.size(); ++drop) {
                    std::vector<int> rest;
                    for (std::size_t u = 0; u < f.size(); ++u) {
                        if (u != drop) rest.push_back(f[u]);
                    }
                    std::optional<Exponents> prod =
                        multiply(static_cast<std::size_t>(f[drop]), src_m[mi]);
                    if (prod) {
                        std::size_t row =
                            dst_findex.at(rest) * dst_m.size() +
                            basis_index[dst_deg].at(*prod);
                        mat[row][col] += sign;
                    }
                    sign = -sign;
                }
            }
        }
        return matrix_rank(std::move(mat));
    };

    GradedBettiTable table;
    std::map<std::pair<int, std::int64_t>, std::int64_t> rank_cache;
    auto cached_rank = [&](int i, std::int64_t j) {
        auto key = std::make_pair(i, j);
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        std::int64_t r = rank_of(i, j);
        rank_cache[key] = r;
        return r;
    };
    // Tor_{i,j} vanishes for j > dmax (Taylor bound + semicontinuity), and for
    // j <= dmax the truncated bases are complete, so every computed rank is
    // exact.
    for (int i = 0; i <= n; ++i) {
        for (std::int64_t j = i; j <= dmax; ++j) {
            std::int64_t src_deg = j - i;
            std::int64_t dim =
                static_cast<std::int64_t>(subsets[i].size()) *
                static_cast<std::int64_t>(basis[src_deg].size());
            if (dim == 0) continue;
            std::int64_t h = dim - cached_rank(i, j) - cached_rank(i + 1, j);
            if (h < 0) throw Internal("negative Koszul homology rank");
            if (h == 0) continue;
            table.entries[{i, j}] = h;
            if (table.totals.size() <= static_cast<std::size_t>(i))
                table.totals.resize(static_cast<std::size_t>(i) + 1, 0);
            table.totals[static_cast<std::size_t>(i)] += h;
        }
    }
    detail::trim_totals(table.totals);
    if (table.totals.empty() || table.totals[0] != 1)
        throw Internal("Koszul engine lost beta_0 = 1");
    std::int64_t beta1 = table.totals.size() > 1 ? table.totals[1] : 0;
    if (beta1 != static_cast<std::int64_t>(minimal.size()))
        throw Internal("Koszul beta_1 disagrees with minimal generator count");
    return table;
}

struct BettiComparison {
    FineBettiTable semigroup_table;
    GradedBettiTable graded_table;
    bool cm_hypothesis = false;       // lead-divisibility criterion passes
    bool support_hypothesis = false;  // extremal variable hits every non-homogeneous element
    bool hypotheses_hold = false;
    bool totals_equal = false;
};

// Runs both engines and checks the comparison theorems: totals agree when the
// hypotheses hold, and the graded Betti numbers dominate in every index
// unconditionally.
inline BettiComparison betti_compare(const AffineSemigroup& s,
                                     const Limits& limits = {}) {
    BettiComparison c;
    c.semigroup_table = betti_semigroup(s, limits);
    StandardBasisResult sb = standard_basis(toric_ideal(s, limits), limits);
    c.graded_table = betti_standard_graded(sb.tangent_cone,
                                           s.generators().size(), limits);
    c.cm_hypothesis = cm_check(sb, s.dim()).graded_ring_cm;
    c.support_hypothesis = gb_support_witness(sb, s.dim()).witnessed;
    c.hypotheses_hold = c.cm_hypothesis && c.support_hypothesis;
    c.totals_equal = c.semigroup_table.totals == c.graded_table.totals;

    const auto& fine = c.semigroup_table.totals;
    const auto& graded = c.graded_table.totals;
    for (std::size_t i = 0; i < fine.size(); ++i) {
        std::int64_t g = i < graded.size() ? graded[i] : 0;
        if (g < fine[i])
            throw Internal("graded Betti number fails to dominate at index " +
                           std::to_string(i));
    }
    if (c.hypotheses_hold && !c.totals_equal)
        throw Internal("Betti totals differ although the comparison hypotheses hold");
    return c;
}

}  // namespace semicone
