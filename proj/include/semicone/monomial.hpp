#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace semicone {

// Exponent tuple of a monomial in z_1..z_n. Index i holds the exponent of
// z_{i+1}; a HIGHER index means a HIGHER variable priority, so z_n > ... > z_1.
using Exponents = std::vector<std::int64_t>;

inline std::int64_t total_degree(const Exponents& e) {
    std::int64_t d = 0;
    for (std::int64_t x : e) d += x;
    return d;
}

inline bool divides(const Exponents& a, const Exponents& b) {
    check_same_length(a.size(), b.size(), "monomial divides");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

inline Exponents mono_mul(const Exponents& a, const Exponents& b) {
    check_same_length(a.size(), b.size(), "monomial mul");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// b / a; precondition divides(a, b).
inline Exponents mono_div(const Exponents& b, const Exponents& a) {
    check_same_length(a.size(), b.size(), "monomial div");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = b[i] - a[i];
        if (r[i] < 0) throw Internal("mono_div: not divisible");
    }
    return r;
}

inline Exponents mono_lcm(const Exponents& a, const Exponents& b) {
    check_same_length(a.size(), b.size(), "monomial lcm");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Exponents mono_gcd(const Exponents& a, const Exponents& b) {
    check_same_length(a.size(), b.size(), "monomial gcd");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
    check_same_length(a.size(), b.size(), "monomial coprime");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0 && b[i] > 0) return false;
    }
    return true;
}

inline std::vector<int> support(const Exponents& e) {
    std::vector<int> s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) s.push_back(static_cast<int>(i));
    }
    return s;
}

inline Exponents unit_exponent(std::size_t n, std::size_t i) {
    Exponents e(n, 0);
    e[i] = 1;
    return e;
}

enum class OrderKind {
    DegRevLex,     // global: total degree, ties by reverse lexicographic
    Lex,           // global: lexicographic from the highest variable down
    NegDegRevLex,  // local: lower total degree wins, ties by reverse lexicographic
};

// A monomial order on z_1..z_n. elim_vars > 0 turns it into a block order: the
// top elim_vars variables (highest indices) are compared lexicographically
// first, then `kind` decides on the remaining block. That makes the top block
// an elimination block whenever `kind` is global.
struct TermOrder {
    OrderKind kind = OrderKind::DegRevLex;
    int elim_vars = 0;

    bool is_global() const { return kind != OrderKind::NegDegRevLex && elim_vars >= 0; }
    bool is_local() const { return kind == OrderKind::NegDegRevLex && elim_vars == 0; }
};

namespace detail {

// Reverse lexicographic tie-break shared by DegRevLex and NegDegRevLex on
// equal-degree monomials: at the smallest index where they differ, the
// SMALLER exponent belongs to the larger monomial.
inline int revlex_tiebreak(const Exponents& p, const Exponents& q,
                           std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (p[i] != q[i]) return p[i] < q[i] ? 1 : -1;
    }
    return 0;
}

inline int compare_block(const Exponents& p, const Exponents& q,
                         std::size_t lo, std::size_t hi, OrderKind kind) {
    switch (kind) {
    case OrderKind::Lex:
        for (std::size_t i = hi; i-- > lo;) {
            if (p[i] != q[i]) return p[i] > q[i] ? 1 : -1;
        }
        return 0;
    case OrderKind::DegRevLex: {
        std::int64_t dp = 0, dq = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            dp += p[i];
            dq += q[i];
        }
        if (dp != dq) return dp > dq ? 1 : -1;
        return revlex_tiebreak(p, q, lo, hi);
    }
    case OrderKind::NegDegRevLex: {
        std::int64_t dp = 0, dq = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            dp += p[i];
            dq += q[i];
        }
        if (dp != dq) return dp < dq ? 1 : -1;
        return revlex_tiebreak(p, q, lo, hi);
    }
    }
    return 0;
}

}  // namespace detail

// Three-way comparison: +1 if p > q, -1 if p < q, 0 if equal.
inline int compare(const Exponents& p, const Exponents& q, const TermOrder& o) {
    check_same_length(p.size(), q.size(), "order compare");
    std::size_t n = p.size();
    std::size_t cut = n;
    if (o.elim_vars > 0) {
        if (static_cast<std::size_t>(o.elim_vars) > n)
            throw Internal("elim_vars exceeds variable count");
        cut = n - static_cast<std::size_t>(o.elim_vars);
        for (std::size_t i = n; i-- > cut;) {
            if (p[i] != q[i]) return p[i] > q[i] ? 1 : -1;
        }
    }
    return detail::compare_block(p, q, 0, cut, o.kind);
}

inline bool greater(const Exponents& p, const Exponents& q, const TermOrder& o) {
    return compare(p, q, o) > 0;
}

// Display form "z2^3*z5" with 1 for the empty product.
inline std::string monomial_string(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace semicone
