// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <random>

#include "mumo/builtins.hpp"
#include "mumo/laurent.hpp"

namespace oracles {

using namespace mumo;

/// Matrix rank by plain rational Gaussian elimination (independent of the
/// Smith normal form route).
inline int elimination_rank(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) a[i][j] = Rat(m.at(i, j));
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int i = rank + 1; i < m.rows; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[rank][c];
            for (int j = c; j < m.cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Determinant by cofactor expansion (independent of Bareiss).
inline Int cofactor_determinant(const IntMatrix& m) {
    const int n = m.rows;
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int det = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Int term = m.at(0, j) * cofactor_determinant(sub);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

/// Full Smith normal form contract: exact factorization, unimodular
/// transforms, nonnegative divisibility chain, rank agreement with rational
/// elimination.
inline void check_snf_contract(const IntMatrix& m) {
    auto f = smith_normal_form(m);
    if (!(mul(mul(f.u, m), f.v) == f.s)) throw Error("snf: U*M*V != S");
    Int du = determinant(f.u), dv = determinant(f.v);
    if (du != 1 && du != -1) throw Error("snf: U not unimodular");
    if (dv != 1 && dv != -1) throw Error("snf: V not unimodular");
    for (int i = 0; i < f.s.rows; ++i)
        for (int j = 0; j < f.s.cols; ++j)
            if (i != j && f.s.at(i, j) != 0) throw Error("snf: S not diagonal");
    auto d = snf_diagonal(f);
    int rank = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) throw Error("snf: negative diagonal entry");
        if (d[i] != 0) ++rank;
        if (i + 1 < d.size() && d[i + 1] != 0 && (d[i] == 0 || d[i + 1] % d[i] != 0))
            throw Error("snf: divisibility chain broken");
    }
    if (rank != elimination_rank(m)) throw Error("snf: rank disagrees with elimination");
}

/// The 2x2 Smith form derived arithmetically: d1 = gcd of all entries,
/// d1 * d2 = |det|.
inline std::pair<Int, Int> snf_2x2_oracle(const IntMatrix& m) {
    Int g = 0;
    for (const auto& e : m.entries) g = boost::multiprecision::gcd(g, e);
    Int det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (g == 0) return {Int(0), Int(0)};
    return {g, abs(det) / g};
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20260810u);
    return gen;
}

inline IntMatrix random_matrix(int max_dim, int max_abs) {
    std::uniform_int_distribution<int> dim(1, max_dim), val(-max_abs, max_abs);
    IntMatrix m(dim(rng()), dim(rng()));
    for (auto& e : m.entries) e = val(rng());
    return m;
}

/// Random unimodular matrix: a product of elementary shears and swaps,
/// with entries kept small so polytope images stay at desk scale.
inline IntMatrix random_unimodular(int n, int steps = 6) {
    std::uniform_int_distribution<int> pick(0, n - 1), shear(-1, 1), kind(0, 3);
    while (true) {
        IntMatrix u = IntMatrix::identity(n);
        for (int s = 0; s < steps; ++s) {
            int i = pick(rng()), j = pick(rng());
            if (i == j) continue;
            if (kind(rng()) == 0) {
                for (int c = 0; c < n; ++c) std::swap(u.at(i, c), u.at(j, c));
                for (int c = 0; c < n; ++c) u.at(i, c) = -u.at(i, c);
            } else {
                Int f = shear(rng());
                for (int c = 0; c < n; ++c) u.at(i, c) += f * u.at(j, c);
            }
        }
        Int cap = 0;
        for (const auto& e : u.entries) cap = std::max(cap, Int(abs(e)));
        if (cap <= 4) return u;
    }
}

/// Deterministic corpus of random reflexive 2- and 3-polytopes: unimodular
/// images of reflexive seeds plus hull search hits.
inline std::vector<Polytope> random_reflexive_corpus(int count) {
    std::vector<std::vector<LatVec>> seeds;
    auto add_seed = [&](std::vector<std::vector<long long>> vs) {
        std::vector<LatVec> pts;
        for (const auto& v : vs) {
            LatVec p;
            for (auto x : v) p.push_back(Int(x));
            pts.push_back(std::move(p));
        }
        seeds.push_back(std::move(pts));
    };
    add_seed({{1, 0}, {0, 1}, {-1, -1}});
    add_seed({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    add_seed({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    add_seed({{1, 0}, {0, 1}, {-2, -3}});
    add_seed({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
    add_seed({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    add_seed({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
              {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
    std::vector<Polytope> corpus;
    std::size_t s = 0;
    while (int(corpus.size()) < count) {
        const auto& seed = seeds[s % seeds.size()];
        int dim = int(seed[0].size());
        IntMatrix u = random_unimodular(dim);
        std::vector<LatVec> pts;
        for (const auto& p : seed) pts.push_back(mul(u, p));
        Polytope poly = polytope_from_points(dim, pts);
        if (!is_reflexive(poly)) throw Error("unimodular image of a reflexive seed not reflexive");
        corpus.push_back(std::move(poly));
        ++s;
    }
    return corpus;
}

/// Brute-force component enumeration: every partition transversal, with cone
/// membership decided by direct scanning of the maximal cones as raw index
/// sets (no Cone machinery).
inline std::vector<std::vector<int>> brute_force_components(const Fan& fan,
                                                            const Partition& part) {
    std::vector<std::vector<int>> out;
    std::vector<std::size_t> pick(part.blocks.size(), 0);
    while (true) {
        std::vector<int> rays;
        for (std::size_t b = 0; b < part.blocks.size(); ++b)
            rays.push_back(part.blocks[b][pick[b]]);
        std::sort(rays.begin(), rays.end());
        bool in_cone = false;
        for (const auto& mc : fan.max_cones) {
            bool all = true;
            for (int r : rays) {
                bool found = false;
                for (int c : mc.ray_indices)
                    if (c == r) found = true;
                if (!found) all = false;
            }
            if (all) in_cone = true;
        }
        if (in_cone) out.push_back(std::move(rays));
        int b = int(part.blocks.size()) - 1;
        while (b >= 0 && pick[b] + 1 == part.blocks[b].size()) {
            pick[b] = 0;
            --b;
        }
        if (b < 0) break;
        ++pick[b];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Constant term of f^m by multinomial enumeration over the support: sum of
/// m! / prod(a_i!)  prod c_i^(a_i) over all exponent assignments with
/// sum a_i = m and sum a_i v_i = 0.  Independent of polynomial multiplication.
inline Rat constant_term_oracle(const LaurentPoly& f, int m) {
    std::vector<Exponents> support;
    std::vector<Rat> coeff;
    for (const auto& [e, c] : f.terms) {
        support.push_back(e);
        coeff.push_back(c.at_t_zero());
    }
    const int s = int(support.size());
    if (m == 0) return 1;
    if (s == 0) return 0;
    std::vector<Int> factorial(m + 1);
    factorial[0] = 1;
    for (int i = 1; i <= m; ++i) factorial[i] = factorial[i - 1] * i;
    Rat total = 0;
    std::vector<int> a(s, 0);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == s - 1) {
            a[idx] = left;
            Exponents sum(f.nvars, 0);
            for (int i = 0; i < s; ++i)
                for (int v = 0; v < f.nvars; ++v) sum[v] += std::int64_t(a[i]) * support[i][v];
            for (auto x : sum)
                if (x != 0) return;
            Int denom = 1;
            Rat prod = 1;
            for (int i = 0; i < s; ++i) {
                denom *= factorial[a[i]];
                for (int rep = 0; rep < a[i]; ++rep) prod *= coeff[i];
            }
            total += Rat(factorial[m], denom) * prod;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[idx] = v;
            self(self, idx + 1, left - v);
        }
    };
    rec(rec, 0, m);
    return total;
}

}  // namespace oracles
