#pragma once

#include <algorithm>
#include <set>

#include "mumo/lattice.hpp"

namespace mumo {

/// Half-space <normal, x> >= offset with primitive integer normal.
struct Facet {
    LatVec normal;
    Rat offset;

    bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
    bool operator<(const Facet& o) const {
        return normal != o.normal ? normal < o.normal : offset < o.offset;
    }
};

/// Polytope in double description: vertex list plus facet inequalities.
/// Constructors accept either description and complete the other by exact
/// dual enumeration; this targets small dimensions (N <= 6).
struct Polytope {
    int dim = 0;               // ambient dimension N
    std::vector<RatVec> vertices;  // extreme points, lex sorted
    std::vector<Facet> facets;     // irredundant, sorted

    bool has_integral_vertices() const {
        for (const auto& v : vertices)
            if (!is_integral(v)) return false;
        return true;
    }

    std::vector<LatVec> integral_vertices() const {
        std::vector<LatVec> out;
        out.reserve(vertices.size());
        for (const auto& v : vertices) out.push_back(to_lattice(v));
        return out;
    }

    bool contains(const RatVec& x) const {
        for (const auto& f : facets)
            if (dot(f.normal, x) < f.offset) return false;
        return true;
    }

    bool strictly_contains(const RatVec& x) const {
        for (const auto& f : facets)
            if (dot(f.normal, x) <= f.offset) return false;
        return true;
    }
};

namespace detail {

inline int affine_rank(const std::vector<RatVec>& pts) {
    if (pts.size() <= 1) return 0;
    RatMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVec d(pts[0].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return rat_rank(diffs);
}

/// Hyperplane through n affinely independent points of Q^n; nullopt when the
/// points are affinely dependent. Result normal is primitive integral.
inline std::optional<Facet> hyperplane_through(const std::vector<RatVec>& pts) {
    // rows (p_i, -1) * (normal, offset)^T = 0
    RatMatrix a;
    for (const auto& p : pts) {
        RatVec row = p;
        row.push_back(Rat(-1));
        a.push_back(std::move(row));
    }
    auto ker = rat_nullspace_vector(a);
    if (!ker) return std::nullopt;
    RatVec normal(ker->begin(), ker->end() - 1);
    bool nonzero = false;
    for (const auto& q : normal)
        if (q != 0) nonzero = true;
    if (!nonzero) return std::nullopt;  // kernel vector degenerate in the offset slot
    // scale so the normal is primitive integral; keep orientation for now
    LatVec nprim = scale_to_primitive(normal);
    // offset = <nprim, p0>
    Rat off = dot(nprim, pts[0]);
    // the kernel could have dimension > 1 (affinely dependent points): verify
    for (const auto& p : pts)
        if (dot(nprim, p) != off) return std::nullopt;
    return Facet{std::move(nprim), std::move(off)};
}

template <typename F>
inline void for_each_subset(int n, int k, F&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Vertex enumeration for { x : <n_f, x> >= c_f }: solve every N-subset of
/// facet equalities and keep feasible unique solutions.  The region must be
/// pointed; for unbounded regions this returns its extreme points only.
inline std::vector<RatVec> enumerate_vertices(int dim, const std::vector<Facet>& facets) {
    std::set<RatVec> found;
    detail::for_each_subset(int(facets.size()), dim, [&](const std::vector<int>& idx) {
        RatMatrix a;
        RatVec b;
        for (int i : idx) {
            a.push_back(to_rational(facets[i].normal));
            b.push_back(facets[i].offset);
        }
        auto x = rat_solve(a, b);
        if (!x) return;
        for (const auto& f : facets)
            if (dot(f.normal, *x) < f.offset) return;
        found.insert(*x);
    });
    return {found.begin(), found.end()};
}

/// Facets of the convex hull of a full-dimensional point set: every
/// hyperplane spanned by N of the points with all points on one side.
inline std::vector<Facet> enumerate_facets(int dim, const std::vector<RatVec>& points) {
    std::set<Facet> found;
    detail::for_each_subset(int(points.size()), dim, [&](const std::vector<int>& idx) {
        std::vector<RatVec> pts;
        for (int i : idx) pts.push_back(points[i]);
        auto h = detail::hyperplane_through(pts);
        if (!h) return;
        bool any_above = false, any_below = false;
        for (const auto& p : points) {
            Rat val = dot(h->normal, p);
            if (val > h->offset) any_above = true;
            if (val < h->offset) any_below = true;
        }
        if (any_above && any_below) return;
        if (any_above) {  // keep orientation with all points on the >= side
            found.insert(*h);
        } else {
            found.insert(Facet{negate(h->normal), -h->offset});
        }
    });
    return {found.begin(), found.end()};
}

/// Convex hull of a point set. Requires full dimension.
inline Polytope polytope_from_points(int dim, const std::vector<RatVec>& points) {
    for (const auto& p : points)
        if (int(p.size()) != dim) throw Error("polytope point of wrong dimension");
    if (detail::affine_rank(points) != dim)
        throw Error("polytope is not full-dimensional");
    Polytope p;
    p.dim = dim;
    p.facets = enumerate_facets(dim, points);
    p.vertices = enumerate_vertices(dim, p.facets);
    return p;
}

inline Polytope polytope_from_points(int dim, const std::vector<LatVec>& points) {
    std::vector<RatVec> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back(to_rational(p));
    return polytope_from_points(dim, pts);
}

/// Region from facet inequalities.  Boundedness is certified by checking that
/// the facet normals positively span (0 interior to their hull); unbounded
/// regions are rejected.  Possibly lower-dimensional (a point, a segment).
inline Polytope polytope_from_facets(int dim, std::vector<Facet> facets) {
    for (auto& f : facets) {
        if (int(f.normal.size()) != dim) throw Error("facet normal of wrong dimension");
        if (is_zero(f.normal)) throw Error("facet normal must be nonzero");
        Int g = vec_gcd(f.normal);
        if (g != 1) {
            for (auto& x : f.normal) x /= g;
            f.offset /= Rat(g);
        }
    }
    // recession cone {x : <n_f, x> >= 0} must be {0}
    std::vector<RatVec> normals;
    for (const auto& f : facets) normals.push_back(to_rational(f.normal));
    bool bounded = false;
    if (detail::affine_rank(normals) == dim) {
        auto hull = enumerate_facets(dim, normals);
        bounded = !hull.empty();
        for (const auto& h : hull)
            if (h.offset >= 0) bounded = false;  // 0 not strictly inside
    }
    if (!bounded) throw Error("facet system defines an unbounded region");
    Polytope p;
    p.dim = dim;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    p.vertices = enumerate_vertices(dim, facets);
    // drop inequalities that are not tight on any vertex (redundant at desk scale)
    for (const auto& f : facets) {
        bool tight = false;
        for (const auto& v : p.vertices)
            if (dot(f.normal, v) == f.offset) tight = true;
        if (tight) p.facets.push_back(f);
    }
    return p;
}

/// Polar dual { y : <y, v> >= -1 for every vertex v of P }.
/// Requires the origin in the interior of P.
inline Polytope polar_dual(const Polytope& p) {
    if (p.vertices.empty() || detail::affine_rank(p.vertices) != p.dim)
        throw Error("polar dual requires a full-dimensional polytope");
    RatVec origin(p.dim, Rat(0));
    if (!p.strictly_contains(origin))
        throw Error("polar dual requires the origin in the interior");
    std::vector<Facet> facets;
    for (const auto& v : p.vertices) {
        LatVec n = scale_to_primitive(v);
        // <v, y> >= -1 scaled by the primitive multiplier of v
        Rat scale = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (n[i] != 0) { scale = Rat(n[i]) / v[i]; break; }
        facets.push_back(Facet{std::move(n), -scale});
    }
    return polytope_from_facets(p.dim, std::move(facets));
}

/// All lattice points of a bounded polytope, in lexicographic order.
/// Enumeration by bounding box plus inequality filter.
inline std::vector<LatVec> lattice_points(const Polytope& p, bool interior_only = false) {
    if (p.vertices.empty()) return {};
    const int n = p.dim;
    std::vector<Int> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        Rat mn = p.vertices[0][j], mx = p.vertices[0][j];
        for (const auto& v : p.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        // floor and ceil of rationals
        Int fl = num(mn) / den(mn);
        if (Rat(fl) > mn) fl -= 1;
        Int ce = num(mx) / den(mx);
        if (Rat(ce) < mx) ce += 1;
        lo[j] = fl;
        hi[j] = ce;
    }
    Int box_size = 1;
    for (int j = 0; j < n; ++j) box_size *= (hi[j] - lo[j] + 1);
    if (box_size > 20'000'000)
        throw Error("lattice point bounding box too large at desk scale");
    std::vector<LatVec> out;
    LatVec cur(n);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == n) {
            RatVec x = to_rational(cur);
            if (interior_only ? p.strictly_contains(x) : p.contains(x))
                out.push_back(cur);
            return;
        }
        for (Int v = lo[j]; v <= hi[j]; ++v) {
            cur[j] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;  // lex order by construction
}

inline std::vector<LatVec> interior_lattice_points(const Polytope& p) {
    return lattice_points(p, true);
}

/// Reflexivity: integral vertices, origin the unique interior lattice point,
/// and an integral polar dual.
inline bool is_reflexive(const Polytope& p) {
    if (p.vertices.empty() || detail::affine_rank(p.vertices) != p.dim) return false;
    if (!p.has_integral_vertices()) return false;
    RatVec origin(p.dim, Rat(0));
    if (!p.strictly_contains(origin)) return false;
    auto inner = interior_lattice_points(p);
    if (inner.size() != 1 || !is_zero(inner[0])) return false;
    return polar_dual(p).has_integral_vertices();
}

inline bool same_vertex_set(const Polytope& a, const Polytope& b) {
    return a.dim == b.dim && a.vertices == b.vertices;  // both lex sorted
}

}  // namespace mumo
