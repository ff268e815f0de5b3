#pragma once

#include <cstdint>
#include <vector>

#include "numeric.hpp"

namespace semicone {

using IntMatrix = std::vector<std::vector<Integer>>;

// Rank over QQ by fraction-free (Bareiss) elimination with full pivoting on
// the smallest nonzero entry; unit pivots keep intermediate minors small for
// the sparse +-1 matrices this library produces. The input is copied.
inline int matrix_rank(IntMatrix m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    Integer prev = 1;
    std::size_t k = 0;
    while (k < rows && k < cols) {
        std::size_t pr = rows, pc = cols;
        Integer best = 0;
        for (std::size_t i = k; i < rows; ++i) {
            for (std::size_t j = k; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Integer a = abs(m[i][j]);
                if (pr == rows || a < best) {
                    pr = i;
                    pc = j;
                    best = a;
                    if (best == 1) break;
                }
            }
            if (best == 1) break;
        }
        if (pr == rows) break;
        std::swap(m[pr], m[k]);
        if (pc != k) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][pc], m[i][k]);
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
        ++k;
    }
    return static_cast<int>(k);
}

// Basis of the integer kernel {u : A u = 0} of a rows x cols matrix, via
// unimodular column reduction: gcd steps clear each row right of its pivot
// while the same operations accumulate in a transform matrix U, so the U
// columns under the zeroed-out part of A span the kernel over ZZ.
inline std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& a) {
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    IntMatrix b = a;
    IntMatrix u(cols, std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

    auto column_combine = [&](std::size_t r, std::size_t cr, std::size_t cj) {
        // Unimodular op on columns (cr, cj) making b[r][cj] = 0.
        Integer x = b[r][cr], y = b[r][cj];
        Integer g, s, t;
        g = boost::multiprecision::gcd(x, y);
        // Extended gcd via Euclid on (x, y).
        {
            Integer old_r = x, rr = y, old_s = 1, ss = 0, old_t = 0, tt = 1;
            while (rr != 0) {
                Integer q = old_r / rr;
                Integer tmp = old_r - q * rr;
                old_r = rr;
                rr = tmp;
                tmp = old_s - q * ss;
                old_s = ss;
                ss = tmp;
                tmp = old_t - q * tt;
                old_t = tt;
                tt = tmp;
            }
            if (old_r < 0) {
                old_r = -old_r;
                old_s = -old_s;
                old_t = -old_t;
            }
            g = old_r;
            s = old_s;
            t = old_t;
        }
        Integer xg = x / g, yg = y / g;
        for (std::size_t i = 0; i < rows; ++i) {
            Integer nr = s * b[i][cr] + t * b[i][cj];
            Integer nj = -yg * b[i][cr] + xg * b[i][cj];
            b[i][cr] = nr;
            b[i][cj] = nj;
        }
        for (std::size_t i = 0; i < cols; ++i) {
            Integer nr = s * u[i][cr] + t * u[i][cj];
            Integer nj = -yg * u[i][cr] + xg * u[i][cj];
            u[i][cr] = nr;
            u[i][cj] = nj;
        }
    };

    std::size_t pivots = 0;
    for (std::size_t r = 0; r < rows && pivots < cols; ++r) {
        for (std::size_t j = pivots + 1; j < cols; ++j) {
            if (b[r][j] != 0) column_combine(r, pivots, j);
        }
        if (b[r][pivots] == 0) {
            // Row has no pivot among the free columns; maybe a later row does.
            bool found = false;
            for (std::size_t j = pivots; j < cols; ++j) {
                if (b[r][j] != 0) {
                    found = true;
                    break;
                }
            }
            if (found) throw Internal("integer_kernel: elimination left residue");
            continue;
        }
        ++pivots;
    }
    std::vector<std::vector<Integer>> kernel;
    for (std::size_t j = pivots; j < cols; ++j) {
        std::vector<Integer> col(cols);
        bool zero = true;
        for (std::size_t i = 0; i < cols; ++i) {
            col[i] = u[i][j];
            if (col[i] != 0) zero = false;
        }
        if (!zero) kernel.push_back(std::move(col));
    }
    return kernel;
}

// Lenstra-Lenstra-Lovasz reduction with delta = 3/4. Column reduction can
// hand back kernel bases with needlessly huge entries, and everything
// downstream (binomial degrees, saturation cost) scales with them. Sizes
// here are tiny, so the Gram-Schmidt data is simply recomputed after every
// basis change.
inline void lll_reduce(std::vector<std::vector<Integer>>& basis) {
    std::size_t n = basis.size();
    if (n < 2) return;
    std::size_t dim = basis[0].size();

    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, 0));
    std::vector<Rational> norm(n, 0);  // squared lengths of the GS vectors
    auto gram_schmidt = [&]() {
        std::vector<std::vector<Rational>> star(n, std::vector<Rational>(dim, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t t = 0; t < dim; ++t) star[i][t] = Rational(basis[i][t]);
            for (std::size_t j = 0; j < i; ++j) {
                Rational num = 0;
                for (std::size_t t = 0; t < dim; ++t)
                    num += Rational(basis[i][t]) * star[j][t];
                mu[i][j] = norm[j] == 0 ? Rational(0) : num / norm[j];
                for (std::size_t t = 0; t < dim; ++t)
                    star[i][t] -= mu[i][j] * star[j][t];
            }
            norm[i] = 0;
            for (std::size_t t = 0; t < dim; ++t) norm[i] += star[i][t] * star[i][t];
        }
    };
    auto round_rational = [](const Rational& x) -> Integer {
        Integer num = numerator(x), den = denominator(x);  // den > 0
        Integer a = 2 * num + den, b = 2 * den;
        Integer q = a / b;  // trunc
        if (a - q * b < 0) --q;
        return q;  // floor(x + 1/2)
    };

    gram_schmidt();
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t j = k; j-- > 0;) {
            Integer q = round_rational(mu[k][j]);
            if (q != 0) {
                for (std::size_t t = 0; t < dim; ++t) basis[k][t] -= q * basis[j][t];
                gram_schmidt();
            }
        }
        Rational rhs = (Rational(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1];
        if (norm[k] >= rhs) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            gram_schmidt();
            k = k > 1 ? k - 1 : 1;
        }
    }
}

// Exact phase-1 simplex with Bland's rule: does A x = b admit x >= 0?
// A is given by columns. Deterministic and cycle-free.
inline bool nonnegative_solution_exists(
    const std::vector<std::vector<Rational>>& columns,
    const std::vector<Rational>& b) {
    std::size_t d = b.size();
    std::size_t m = columns.size();
    for (const auto& c : columns) check_same_length(c.size(), d, "simplex column");

    // Tableau [A | I | rhs] with rhs >= 0; artificial variables start basic.
    std::vector<std::vector<Rational>> t(d, std::vector<Rational>(m + d + 1, 0));
    for (std::size_t i = 0; i < d; ++i) {
        bool flip = b[i] < 0;
        for (std::size_t j = 0; j < m; ++j) t[i][j] = flip ? -columns[j][i] : columns[j][i];
        t[i][m + i] = 1;
        t[i][m + d] = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(d);
    for (std::size_t i = 0; i < d; ++i) basis[i] = m + i;

    // Maximize -(sum of artificials); reduced costs r_j = sum of rows for
    // structural columns while artificials are basic.
    std::vector<Rational> red(m + d, 0);
    Rational obj = 0;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < d; ++i) red[j] += t[i][j];
    }
    for (std::size_t i = 0; i < d; ++i) obj -= t[i][m + d];

    while (true) {
        std::size_t enter = m + d;
        for (std::size_t j = 0; j < m + d; ++j) {
            if (red[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == m + d) break;
        std::size_t leave = d;
        Rational best = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][m + d] / t[i][enter];
            if (leave == d || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == d) throw Internal("simplex: phase-1 objective unbounded");
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j <= m + d; ++j) t[i][j] -= f * t[leave][j];
        }
        Rational f = red[enter];
        for (std::size_t j = 0; j < m + d; ++j) red[j] -= f * t[leave][j];
        obj += f * t[leave][m + d];
        basis[leave] = enter;
    }
    return obj == 0;
}

// Is v in the rational cone spanned by the given rays?
inline bool cone_contains(const std::vector<Point>& rays, const Point& v) {
    if (is_zero(v)) return true;
    std::vector<std::vector<Rational>> cols;
    cols.reserve(rays.size());
    for (const Point& r : rays) {
        check_same_length(r.size(), v.size(), "cone ray");
        std::vector<Rational> c(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) c[i] = Rational(r[i]);
        cols.push_back(std::move(c));
    }
    std::vector<Rational> b(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) b[i] = Rational(v[i]);
    return nonnegative_solution_exists(cols, b);
}

}  // namespace semicone
