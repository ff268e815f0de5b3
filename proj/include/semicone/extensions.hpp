#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "apery.hpp"
#include "betti.hpp"
#include "mora.hpp"
#include "semigroup.hpp"
#include "toric.hpp"

namespace semicone {

struct CICertificate {
    int height = 0;           // codimension: (number of generators) - d
    int generator_count = 0;  // minimal generators of the toric ideal
    bool is_ci = false;
};

inline CICertificate is_complete_intersection(const AffineSemigroup& s,
                                              const Limits& limits = {}) {
    CICertificate c;
    c.height = s.generator_count() - s.dim();
    c.generator_count = static_cast<int>(toric_ideal(s, limits).size());
    c.is_ci = c.height == c.generator_count;
    return c;
}

// The extension lambda*S union {mu*b} together with its defining data in the
// extension variable ordering: z_1..z_n are the scaled base generators in the
// base's canonical order, y comes last with the highest priority.
struct NiceExtension {
    AffineSemigroup base;
    Point b;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;
    std::vector<std::int64_t> alpha;
    AffineSemigroup result;
    // I(result) in the extension ordering: lifted base generators + relation.
    std::vector<Binomial> ideal;
    Binomial relation;  // y^lambda - z^(mu*alpha)
    // Maps extension variable index (0..n) to the result's canonical index.
    std::vector<int> to_canonical;
};

inline NiceExtension nice_extension(const AffineSemigroup& s, const Point& b,
                                    std::int64_t lambda, std::int64_t mu,
                                    const std::vector<std::int64_t>& alpha,
                                    const Limits& limits = {}) {
    std::size_t n = s.generators().size();
    check_same_length(alpha.size(), n, "extension factorization");
    if (lambda < 1 || mu < 1)
        throw InvalidInput(InvalidInput::Kind::Malformed,
                           "lambda and mu must be positive");
    for (std::int64_t x : alpha) {
        if (x < 0)
            throw InvalidInput(InvalidInput::Kind::Malformed,
                               "negative entry in factorization");
    }
    Point sum(static_cast<std::size_t>(s.dim()), 0);
    std::int64_t alpha_total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sum = add(sum, scale(alpha[i], s.generators()[i]));
        alpha_total += alpha[i];
    }
    if (sum != b)
        throw InvalidInput(InvalidInput::Kind::NotInSpan,
                           "factorization does not reach " +
                               AffineSemigroup::point_string(b));
    if (std::gcd(lambda, mu) != 1)
        throw InvalidInput(InvalidInput::Kind::GcdViolation,
                           "gcd(lambda, mu) must be 1");
    if (lambda > alpha_total)
        throw InvalidInput(InvalidInput::Kind::NotNice,
                           "lambda " + std::to_string(lambda) +
                               " exceeds factorization length " +
                               std::to_string(alpha_total));

    // The presentation I(S_b) = lifted I(S) + (y^lambda - z^(mu alpha)) needs
    // b to have order exactly lambda in ZZ S / lambda ZZ S; otherwise mu*b
    // satisfies extra relations with the scaled generators and every claim
    // downstream (mu recursion, CI and CM preservation, Betti recursion)
    // fails. For a numerical semigroup with ZZ S = ZZ this says
    // gcd(lambda, b) = 1. The attainable multiples {t : t*b in lambda ZZ S}
    // form a subgroup of ZZ read off the kernel of [lambda*a_1 .. lambda*a_n b].
    {
        std::vector<Point> aug;
        for (const Point& a : s.generators()) aug.push_back(scale(lambda, a));
        aug.push_back(b);
        Integer ord = 0;
        for (const std::vector<Integer>& k : lattice_kernel(aug))
            ord = boost::multiprecision::gcd(ord, k.back());
        if (ord != lambda)
            throw InvalidInput(InvalidInput::Kind::GcdViolation,
                               "b has order " + ord.str() +
                                   " modulo lambda * group(S), expected " +
                                   std::to_string(lambda));
    }

    NiceExtension e;
    e.base = s;
    e.b = b;
    e.lambda = lambda;
    e.mu = mu;
    e.alpha = alpha;

    std::vector<Point> gens;
    for (const Point& a : s.generators()) gens.push_back(scale(lambda, a));
    gens.push_back(scale(mu, b));
    e.result = AffineSemigroup::create(s.dim(), gens);

    // Scaled base extremal rays must stay extremal (scaling preserves the
    // lexicographic order, so the lists compare directly).
    {
        std::vector<Point> expected;
        for (const Point& a : s.extremal_rays()) expected.push_back(scale(lambda, a));
        if (e.result.extremal_rays() != expected)
            throw Internal("extension changed the extremal rays");
    }

    for (const Binomial& f : toric_ideal(s, limits)) {
        Exponents p = f.plus;
        p.push_back(0);
        Exponents q = *f.minus;
        q.push_back(0);
        e.ideal.push_back(Binomial{std::move(p), std::move(q)});
    }
    Exponents rel_plus(n + 1, 0), rel_minus(n + 1, 0);
    rel_plus[n] = lambda;
    for (std::size_t i = 0; i < n; ++i) rel_minus[i] = mu * alpha[i];
    e.relation = Binomial{rel_plus, rel_minus};
    if (!greater(rel_plus, rel_minus, local_order()))
        throw Internal("extension relation lead is not the pure power");
    e.ideal.push_back(e.relation);

    e.to_canonical.resize(n + 1, -1);
    for (std::size_t i = 0; i <= n; ++i) {
        const Point& g = i < n ? gens[i] : gens[n];
        for (int j = 0; j < e.result.generator_count(); ++j) {
            if (e.result.generators()[static_cast<std::size_t>(j)] == g) {
                e.to_canonical[i] = j;
                break;
            }
        }
        if (e.to_canonical[i] < 0) throw Internal("extension generator lost");
    }
    return e;
}

struct ExtensionVerification {
    bool relation_lead_is_pure_power = false;
    bool ideal_matches = false;  // lifted generators + relation give I(result)
    bool base_graded_cm = false;
    bool ext_graded_cm = false;
    bool cm_preserved = false;  // base CM implies extension CM
    int base_mu = 0;
    int ext_mu = 0;
    bool mu_recursion = false;  // ext_mu = base_mu + 1
    bool base_homogeneous = false;  // hypothesis of the Betti recursion
    std::vector<std::int64_t> base_betti;
    std::vector<std::int64_t> ext_betti;
    bool betti_recursion_fine = false;
    bool betti_recursion_graded = false;
};

namespace detail {

inline bool betti_recursion_holds(const std::vector<std::int64_t>& base,
                                  const std::vector<std::int64_t>& ext) {
    std::size_t len = std::max(ext.size(), base.size() + 1);
    for (std::size_t i = 1; i < len; ++i) {
        std::int64_t want = (i < base.size() ? base[i] : 0) +
                            (i - 1 < base.size() ? base[i - 1] : 0);
        std::int64_t have = i < ext.size() ? ext[i] : 0;
        if (want != have) return false;
    }
    return true;
}

inline Exponents permute_exponents(const Exponents& e,
                                   const std::vector<int>& to) {
    Exponents out(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        out[static_cast<std::size_t>(to[i])] = e[i];
    return out;
}

}  // namespace detail

// Checks the extension theorems on one instance: the relation's lead, the
// generator count recursion, CM preservation, the Betti recursion (both
// engines), and that the lifted ideal really defines the extension.
inline ExtensionVerification verify_extension_theorems(const NiceExtension& e,
                                                       const Limits& limits = {}) {
    ExtensionVerification v;
    v.relation_lead_is_pure_power =
        greater(e.relation.plus, *e.relation.minus, local_order());

    TermOrder drl{OrderKind::DegRevLex, 0};
    std::vector<Binomial> canon_ideal;
    for (const Binomial& f : e.ideal) {
        canon_ideal.push_back(Binomial{
            detail::permute_exponents(f.plus, e.to_canonical),
            detail::permute_exponents(*f.minus, e.to_canonical)});
    }
    std::vector<Binomial> result_gb = toric_groebner(e.result, drl, limits);
    std::vector<Binomial> lifted_gb =
        reduced_groebner_basis(canon_ideal, drl, limits);
    v.ideal_matches = true;
    for (const Binomial& f : canon_ideal) {
        if (normal_form(f, result_gb, drl, limits)) v.ideal_matches = false;
    }
    for (const Binomial& f : result_gb) {
        if (normal_form(f, lifted_gb, drl, limits)) v.ideal_matches = false;
    }

    std::vector<Binomial> base_toric = toric_ideal(e.base, limits);
    std::vector<Binomial> ext_toric = toric_ideal(e.result, limits);
    v.base_mu = static_cast<int>(base_toric.size());
    v.ext_mu = static_cast<int>(ext_toric.size());
    v.mu_recursion = v.ext_mu == v.base_mu + 1;

    StandardBasisResult base_sb = standard_basis(base_toric, limits);
    StandardBasisResult ext_sb = standard_basis(ext_toric, limits);
    v.base_graded_cm = cm_check(base_sb, e.base.dim()).graded_ring_cm;
    v.ext_graded_cm = cm_check(ext_sb, e.result.dim()).graded_ring_cm;
    v.cm_preserved = !v.base_graded_cm || v.ext_graded_cm;

    v.base_homogeneous = is_homogeneous_semigroup(e.base, limits).homogeneous;

    FineBettiTable base_fine = betti_semigroup(e.base, limits);
    FineBettiTable ext_fine = betti_semigroup(e.result, limits);
    v.base_betti = base_fine.totals;
    v.ext_betti = ext_fine.totals;
    v.betti_recursion_fine =
        detail::betti_recursion_holds(base_fine.totals, ext_fine.totals);

    GradedBettiTable base_graded = betti_standard_graded(
        base_sb.tangent_cone, e.base.generators().size(), limits);
    GradedBettiTable ext_graded = betti_standard_graded(
        ext_sb.tangent_cone, e.result.generators().size(), limits);
    v.betti_recursion_graded =
        detail::betti_recursion_holds(base_graded.totals, ext_graded.totals);
    return v;
}

struct ExtensionStep {
    Point b;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;
    std::vector<std::int64_t> alpha;
};

struct ExtensionSequence {
    AffineSemigroup result;
    std::vector<CICertificate> step_certificates;  // one per step, all CI
};

// Builds a semigroup from NN^d by successive nice extensions; each step must
// come out a complete intersection.
inline ExtensionSequence extension_sequence(int d,
                                            const std::vector<ExtensionStep>& steps,
                                            const Limits& limits = {}) {
    std::vector<Point> units;
    for (int i = 0; i < d; ++i) {
        Point u(static_cast<std::size_t>(d), 0);
        u[static_cast<std::size_t>(i)] = 1;
        units.push_back(std::move(u));
    }
    ExtensionSequence seq{AffineSemigroup::create(d, units), {}};
    for (const ExtensionStep& st : steps) {
        NiceExtension e =
            nice_extension(seq.result, st.b, st.lambda, st.mu, st.alpha, limits);
        seq.result = e.result;
        CICertificate c = is_complete_intersection(seq.result, limits);
        if (!c.is_ci)
            throw Internal("extension step is not a complete intersection");
        seq.step_certificates.push_back(c);
    }
    return seq;
}

// Numerical semigroup generated by the geometric progression
// a^r, a^(r-1) b, ..., b^r, together with its predicted invariants.
struct GeometricMember {
    std::int64_t a = 0;
    std::int64_t b = 0;
    int r = 0;
    AffineSemigroup semigroup;
    // Expected minimal generators and standard basis: z_{i+1}^a - z_i^b.
    std::vector<Binomial> expected_basis;
    std::vector<std::int64_t> expected_betti;  // binomial coefficients C(r, i)
    Integer expected_gastinger_dimension;      // a^r
};

inline Integer binomial_coefficient(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

inline GeometricMember geometric_semigroup(std::int64_t a, std::int64_t b, int r,
                                           const Limits& limits = {}) {
    if (r < 1)
        throw InvalidInput(InvalidInput::Kind::Malformed, "r must be >= 1");
    if (a >= b)
        throw InvalidInput(InvalidInput::Kind::OrderViolation,
                           "need a < b, got a = " + std::to_string(a) +
                               ", b = " + std::to_string(b));
    if (a < 1 || std::gcd(a, b) != 1)
        throw InvalidInput(InvalidInput::Kind::GcdViolation,
                           "a and b must be coprime positive integers");
    GeometricMember m;
    m.a = a;
    m.b = b;
    m.r = r;
    std::vector<Point> gens;
    for (int i = 1; i <= r + 1; ++i) {
        Integer v = int_pow(Integer(a), static_cast<std::uint64_t>(r + 1 - i)) *
                    int_pow(Integer(b), static_cast<std::uint64_t>(i - 1));
        gens.push_back(Point{v});
    }
    m.semigroup = AffineSemigroup::create(1, gens);
    // Ascending generator values match the canonical order, so variable i+1
    // really is the i-th progression element.
    for (int i = 1; i <= r; ++i) {
        Exponents plus(static_cast<std::size_t>(r) + 1, 0);
        Exponents minus(static_cast<std::size_t>(r) + 1, 0);
        plus[static_cast<std::size_t>(i)] = a;
        minus[static_cast<std::size_t>(i) - 1] = b;
        m.expected_basis.push_back(Binomial{std::move(plus), std::move(minus)});
    }
    for (int i = 0; i <= r; ++i)
        m.expected_betti.push_back(
            static_cast<std::int64_t>(binomial_coefficient(r, i)));
    m.expected_gastinger_dimension =
        int_pow(Integer(a), static_cast<std::uint64_t>(r));
    (void)limits;
    return m;
}

// Projective closure of a numerical semigroup: homogenize the degrevlex
// reduced basis by a new variable z_0 of lowest priority (index 0), and build
// the closure semigroup in NN^2. CM and Gorenstein are certified through the
// complete-intersection route when it applies.
struct ProjectiveClosure {
    std::vector<Binomial> homogenized_basis;      // Groebner basis of the closure ideal
    std::vector<Binomial> minimal_generators;
    AffineSemigroup closure;
    CICertificate ci;
    std::optional<bool> cm;          // set when certified
    std::optional<bool> gorenstein;  // set when certified
};

inline ProjectiveClosure projective_closure(const AffineSemigroup& s,
                                            const Limits& limits = {}) {
    if (s.dim() != 1)
        throw InvalidInput(InvalidInput::Kind::NotNumerical,
                           "projective closure requires a numerical semigroup");
    TermOrder drl{OrderKind::DegRevLex, 0};
    std::vector<Binomial> gb = toric_groebner(s, drl, limits);
    ProjectiveClosure pc;
    for (const Binomial& f : gb) {
        if (f.is_monomial()) throw Internal("monomial in a toric basis");
        std::int64_t gap = total_degree(f.plus) - total_degree(*f.minus);
        Exponents p(f.plus.size() + 1, 0);
        Exponents q(f.plus.size() + 1, 0);
        p[0] = 0;
        q[0] = gap;  // oriented under degrevlex, so the tail is the light term
        for (std::size_t i = 0; i < f.plus.size(); ++i) {
            p[i + 1] = f.plus[i];
            q[i + 1] = (*f.minus)[i];
        }
        pc.homogenized_basis.push_back(Binomial{std::move(p), std::move(q)});
    }
    pc.minimal_generators = minimalize_homogeneous(pc.homogenized_basis, limits);

    const std::vector<Point>& gens = s.generators();
    Integer top = gens.back()[0];
    for (const Point& g : gens) top = std::max(top, g[0]);
    std::vector<Point> closure_gens;
    closure_gens.push_back(Point{Integer(0), top});
    for (const Point& g : gens) closure_gens.push_back(Point{g[0], top - g[0]});
    pc.closure = AffineSemigroup::create(2, closure_gens);

    pc.ci.height = pc.closure.generator_count() - pc.closure.dim();
    pc.ci.generator_count = static_cast<int>(pc.minimal_generators.size());
    pc.ci.is_ci = pc.ci.height == pc.ci.generator_count;
    if (pc.ci.is_ci) {
        pc.cm = true;
        pc.gorenstein = true;
    }
    return pc;
}

}  // namespace semicone
