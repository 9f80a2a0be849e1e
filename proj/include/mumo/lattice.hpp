#pragma once

#include <algorithm>
#include <optional>
#include <tuple>

#include "mumo/core.hpp"

namespace mumo {

inline Int vec_gcd(const LatVec& v) {
    Int g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

/// Divide a nonzero integer vector by the gcd of its entries.
inline LatVec primitive(const LatVec& v) {
    Int g = vec_gcd(v);
    if (g == 0) throw Error("zero vector has no primitive representative");
    LatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

inline bool is_primitive(const LatVec& v) {
    return !is_zero(v) && vec_gcd(v) == 1;
}

/// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> entries;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(std::size_t(r) * c, Int(0)) {
        if (r < 0 || c < 0) throw Error("matrix dimensions must be nonnegative");
    }

    Int& at(int i, int j) { return entries[std::size_t(i) * cols + j]; }
    const Int& at(int i, int j) const { return entries[std::size_t(i) * cols + j]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<LatVec>& rs) {
        if (rs.empty()) return IntMatrix(0, 0);
        IntMatrix m(int(rs.size()), int(rs[0].size()));
        for (int i = 0; i < m.rows; ++i) {
            if (int(rs[i].size()) != m.cols) throw Error("ragged rows");
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
        }
        return m;
    }

    LatVec row(int i) const {
        LatVec out(cols);
        for (int j = 0; j < cols; ++j) out[j] = at(i, j);
        return out;
    }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && entries == o.entries;
    }

    IntMatrix transposed() const {
        IntMatrix m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    bool is_zero() const {
        for (const auto& e : entries)
            if (e != 0) return false;
        return true;
    }
};

inline IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw Error("matrix product: dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

inline LatVec mul(const IntMatrix& a, const LatVec& v) {
    if (a.cols != int(v.size())) throw Error("matrix-vector product: dimension mismatch");
    LatVec out(a.rows, Int(0));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out[i] += a.at(i, j) * v[j];
    return out;
}

/// Fraction-free Bareiss determinant.
inline Int determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw Error("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

struct SmithNormalForm {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix s;  // diagonal, d1 | d2 | ...
    IntMatrix v;  // unimodular, cols x cols
};

/// Smith normal form by gcd row/column reduction with smallest-pivot selection.
/// Maintains u * m * v == s throughout.
inline SmithNormalForm smith_normal_form(const IntMatrix& m) {
    SmithNormalForm r{IntMatrix::identity(m.rows), m, IntMatrix::identity(m.cols)};
    IntMatrix& s = r.s;
    IntMatrix& u = r.u;
    IntMatrix& v = r.v;
    const int nr = m.rows, nc = m.cols;

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < nc; ++j) std::swap(s.at(a, j), s.at(b, j));
        for (int j = 0; j < nr; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < nr; ++i) std::swap(s.at(i, a), s.at(i, b));
        for (int i = 0; i < nc; ++i) std::swap(v.at(i, a), v.at(i, b));
    };
    auto add_row = [&](int dst, int src, const Int& f) {  // row dst += f * row src
        for (int j = 0; j < nc; ++j) s.at(dst, j) += f * s.at(src, j);
        for (int j = 0; j < nr; ++j) u.at(dst, j) += f * u.at(src, j);
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int i = 0; i < nr; ++i) s.at(i, dst) += f * s.at(i, src);
        for (int i = 0; i < nc; ++i) v.at(i, dst) += f * v.at(i, src);
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < nc; ++j) s.at(i, j) = -s.at(i, j);
        for (int j = 0; j < nr; ++j) u.at(i, j) = -u.at(i, j);
    };

    // nearest-integer quotient keeps remainders at most half the pivot
    auto round_div = [](const Int& a, const Int& b) {
        Int q = a / b;
        Int rem = a - q * b;
        if (2 * abs(rem) > abs(b)) q += ((rem < 0) == (b < 0)) ? 1 : -1;
        return q;
    };

    int t = 0;
    const int bound = std::min(nr, nc);
    while (t < bound) {
        // entry-size-aware pivoting: bring the smallest nonzero |entry| of the
        // trailing block to (t,t), sweep its row and column once with nearest
        // quotients, and re-select; any surviving remainder at most halves the
        // pivot, so the rounds are logarithmically bounded.
        bool cleared = false;
        bool any = true;
        while (!cleared) {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < nr; ++i)
                for (int j = t; j < nc; ++j) {
                    if (s.at(i, j) == 0) continue;
                    Int a = abs(s.at(i, j));
                    if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
                }
            if (pi < 0) { any = false; break; }  // trailing block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (int i = t + 1; i < nr; ++i) {
                if (s.at(i, t) == 0) continue;
                add_row(i, t, -round_div(s.at(i, t), s.at(t, t)));
            }
            for (int j = t + 1; j < nc; ++j) {
                if (s.at(t, j) == 0) continue;
                add_col(j, t, -round_div(s.at(t, j), s.at(t, t)));
            }
            cleared = true;
            for (int i = t + 1; i < nr; ++i)
                if (s.at(i, t) != 0) cleared = false;
            for (int j = t + 1; j < nc; ++j)
                if (s.at(t, j) != 0) cleared = false;
        }
        if (!any) break;

        // divisibility: fold a non-divisible trailing entry into the pivot row
        bool redo = false;
        for (int i = t + 1; i < nr && !redo; ++i)
            for (int j = t + 1; j < nc && !redo; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    add_row(t, i, 1);
                    redo = true;
                }
        if (redo) continue;

        if (s.at(t, t) < 0) negate_row(t);
        ++t;
    }
    return r;
}

inline int snf_rank(const IntMatrix& m) {
    auto f = smith_normal_form(m);
    int r = 0;
    for (int i = 0; i < std::min(m.rows, m.cols); ++i)
        if (f.s.at(i, i) != 0) ++r;
    return r;
}

inline std::vector<Int> snf_diagonal(const SmithNormalForm& f) {
    std::vector<Int> d;
    for (int i = 0; i < std::min(f.s.rows, f.s.cols); ++i) d.push_back(f.s.at(i, i));
    return d;
}

// ---------------------------------------------------------------------------
// Exact rational elimination: solvers shared by the polytope machinery.

using RatMatrix = std::vector<RatVec>;

/// Solve the square system a x = b; nullopt when a is singular.
inline std::optional<RatVec> rat_solve(RatMatrix a, RatVec b) {
    const int n = int(a.size());
    for (auto& row : a)
        if (int(row.size()) != n) throw Error("rat_solve: matrix not square");
    if (int(b.size()) != n) throw Error("rat_solve: rhs size mismatch");
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        Rat inv = Rat(1) / a[c][c];
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c] * inv;
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

inline int rat_rank(RatMatrix a) {
    if (a.empty()) return 0;
    const int nr = int(a.size()), nc = int(a[0].size());
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int i = rank; i < nr; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        Rat inv = Rat(1) / a[rank][c];
        for (int i = rank + 1; i < nr; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] * inv;
            for (int j = c; j < nc; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// One rational nullspace vector of the nr x nc system a x = 0, or nullopt
/// when a has full column rank.
inline std::optional<RatVec> rat_nullspace_vector(RatMatrix a) {
    if (a.empty()) return std::nullopt;
    const int nr = int(a.size()), nc = int(a[0].size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int i = rank; i < nr; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        Rat inv = Rat(1) / a[rank][c];
        for (int i = 0; i < nr; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            Rat f = a[i][c] * inv;
            for (int j = c; j < nc; ++j) a[i][j] -= f * a[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    // first free column yields a kernel vector
    std::vector<bool> is_pivot(nc, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        RatVec x(nc, Rat(0));
        x[c] = 1;
        for (int r = 0; r < rank; ++r) x[pivot_col[r]] = -a[r][c] / a[r][pivot_col[r]];
        return x;
    }
    return std::nullopt;
}

/// Scale a rational vector to a primitive integer vector (same direction).
inline LatVec scale_to_primitive(const RatVec& v) {
    Int lcm = 1;
    for (const auto& q : v) lcm = boost::multiprecision::lcm(lcm, den(q));
    LatVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = num(v[i]) * (lcm / den(v[i]));
    return primitive(w);
}

/// Inverse of a unimodular integer matrix. Throws when |det| != 1.
inline IntMatrix unimodular_inverse(const IntMatrix& g) {
    if (g.rows != g.cols) throw Error("unimodular_inverse: matrix not square");
    Int d = determinant(g);
    if (d != 1 && d != -1)
        throw Error("matrix is not unimodular (|det| = " + Int(abs(d)).str() + ")");
    const int n = g.rows;
    RatMatrix a(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(g.at(i, j));
    IntMatrix inv(n, n);
    for (int k = 0; k < n; ++k) {
        RatVec e(n, Rat(0));
        e[k] = 1;
        auto x = rat_solve(a, e);
        for (int i = 0; i < n; ++i) {
            if (!is_integral((*x)[i])) throw Error("unimodular inverse is not integral");
            inv.at(i, k) = num((*x)[i]);
        }
    }
    return inv;
}

}  // namespace mumo
