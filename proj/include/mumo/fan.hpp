#pragma once

#include <map>
#include <set>

#include "mumo/polytope.hpp"

namespace mumo {

/// Cone of a fan, stored as sorted distinct indices into the fan's ray list.
struct Cone {
    std::vector<int> ray_indices;

    Cone() = default;
    explicit Cone(std::vector<int> idx) : ray_indices(std::move(idx)) {
        std::sort(ray_indices.begin(), ray_indices.end());
        auto dup = std::adjacent_find(ray_indices.begin(), ray_indices.end());
        if (dup != ray_indices.end()) throw Error("cone has repeated ray indices");
    }

    int size() const { return int(ray_indices.size()); }
    bool contains(int r) const {
        return std::binary_search(ray_indices.begin(), ray_indices.end(), r);
    }
    bool contains_all(const Cone& o) const {
        return std::includes(ray_indices.begin(), ray_indices.end(),
                             o.ray_indices.begin(), o.ray_indices.end());
    }

    bool operator==(const Cone& o) const { return ray_indices == o.ray_indices; }
    bool operator<(const Cone& o) const { return ray_indices < o.ray_indices; }
};

inline Cone cone_union(const Cone& a, const Cone& b) {
    std::vector<int> out;
    std::set_union(a.ray_indices.begin(), a.ray_indices.end(),
                   b.ray_indices.begin(), b.ray_indices.end(), std::back_inserter(out));
    return Cone(std::move(out));
}

/// Complete simplicial fan: primitive ray generators plus maximal cones.
/// Only pure fans (every maximal cone spanned by exactly N independent rays)
/// are accepted; other inputs fail fast with a diagnostic.
struct Fan {
    int rank = 0;                 // ambient lattice rank N
    std::vector<LatVec> rays;     // primitive, pairwise distinct
    std::vector<Cone> max_cones;  // N-cones, sorted canonically

    Fan() = default;
    Fan(int n, std::vector<LatVec> ray_list, std::vector<Cone> cones)
        : rank(n), rays(std::move(ray_list)), max_cones(std::move(cones)) {
        validate();
    }

    void validate() {
        if (rank <= 0) throw Error("fan rank must be positive");
        std::set<LatVec> seen;
        for (const auto& r : rays) {
            if (int(r.size()) != rank) throw Error("ray of wrong dimension");
            if (!is_primitive(r)) throw Error("fan ray is not primitive");
            if (!seen.insert(r).second) throw Error("fan has repeated rays");
        }
        if (max_cones.empty()) throw Error("fan has no maximal cones");
        std::vector<bool> used(rays.size(), false);
        for (const auto& c : max_cones) {
            if (c.size() != rank)
                throw Error("fan is not pure: maximal cone with " +
                            std::to_string(c.size()) + " rays in rank " +
                            std::to_string(rank));
            for (int i : c.ray_indices) {
                if (i < 0 || i >= int(rays.size())) throw Error("cone ray index out of range");
                used[i] = true;
            }
            if (determinant(generator_matrix(c)) == 0)
                throw Error("fan is not simplicial: degenerate maximal cone");
        }
        for (std::size_t i = 0; i < used.size(); ++i)
            if (!used[i]) throw Error("ray " + std::to_string(i) + " lies in no maximal cone");
        std::sort(max_cones.begin(), max_cones.end());
        max_cones.erase(std::unique(max_cones.begin(), max_cones.end()), max_cones.end());
    }

    IntMatrix generator_matrix(const Cone& c) const {
        std::vector<LatVec> rows;
        for (int i : c.ray_indices) rows.push_back(rays[i]);
        return IntMatrix::from_rows(rows);
    }

    int num_rays() const { return int(rays.size()); }
};

/// Nonsingularity: every maximal cone is generated by a lattice basis.
inline bool is_smooth(const Fan& fan) {
    for (const auto& c : fan.max_cones) {
        Int d = determinant(fan.generator_matrix(c));
        if (d != 1 && d != -1) return false;
    }
    return true;
}

/// Completeness for a pure simplicial fan: every ridge ((N-1)-face of a
/// maximal cone) lies in exactly two maximal cones and the cone adjacency
/// graph is connected.
inline bool is_complete(const Fan& fan) {
    std::map<std::vector<int>, std::vector<int>> ridge_cones;
    for (int ci = 0; ci < int(fan.max_cones.size()); ++ci) {
        const auto& idx = fan.max_cones[ci].ray_indices;
        for (int omit = 0; omit < int(idx.size()); ++omit) {
            std::vector<int> ridge;
            for (int j = 0; j < int(idx.size()); ++j)
                if (j != omit) ridge.push_back(idx[j]);
            ridge_cones[ridge].push_back(ci);
        }
    }
    std::vector<std::vector<int>> adj(fan.max_cones.size());
    for (const auto& [ridge, cones] : ridge_cones) {
        if (cones.size() != 2) return false;
        adj[cones[0]].push_back(cones[1]);
        adj[cones[1]].push_back(cones[0]);
    }
    std::vector<bool> seen(fan.max_cones.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

/// Fan of P^N: rays e0 = -e1-...-eN, e1, ..., eN; maximal cones all
/// N-subsets of the rays.
inline Fan build_projective_fan(int n) {
    if (n < 1) throw Error("projective fan needs N >= 1");
    std::vector<LatVec> rays;
    LatVec e0(n, Int(-1));
    rays.push_back(e0);
    for (int i = 0; i < n; ++i) {
        LatVec e(n, Int(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    std::vector<Cone> cones;
    for (int omit = 0; omit <= n; ++omit) {
        std::vector<int> idx;
        for (int i = 0; i <= n; ++i)
            if (i != omit) idx.push_back(i);
        cones.emplace_back(std::move(idx));
    }
    return Fan(n, std::move(rays), std::move(cones));
}

/// Delta = convex hull of the primitive ray generators.
inline Polytope delta_polytope(const Fan& fan) {
    if (!is_complete(fan)) throw Error("delta polytope requires a complete fan");
    return polytope_from_points(fan.rank, fan.rays);
}

/// Canonical coordinate chart on the affine patch U_sigma of a smooth
/// top-dimensional cone: the primitive generators of the dual cone, sorted
/// lexicographically, paired with the matching cone generators
/// (<dual_basis[i], matched_rays[i]> = 1, zero against the others).
struct Chart {
    Cone cone;
    std::vector<LatVec> dual_basis;    // lex sorted
    std::vector<int> matched_rays;     // ray index dual to each chart coordinate
};

/// Primitive generators of the dual cone sigma^vee for a smooth N-cone:
/// the rows of the inverse transpose of the generator matrix, in canonical
/// (lexicographic) order.
inline std::vector<LatVec> dual_cone_basis(const Fan& fan, const Cone& sigma) {
    if (sigma.size() != fan.rank)
        throw Error("dual cone basis requires a top-dimensional cone");
    IntMatrix g = fan.generator_matrix(sigma);
    IntMatrix ginv = unimodular_inverse(g);  // throws when not unimodular
    std::vector<LatVec> duals;
    for (int i = 0; i < fan.rank; ++i) {
        LatVec nu(fan.rank);
        for (int j = 0; j < fan.rank; ++j) nu[j] = ginv.at(j, i);  // column i
        duals.push_back(std::move(nu));
    }
    std::sort(duals.begin(), duals.end());
    return duals;
}

inline Chart chart(const Fan& fan, const Cone& sigma) {
    Chart ch;
    ch.cone = sigma;
    ch.dual_basis = dual_cone_basis(fan, sigma);
    for (const auto& nu : ch.dual_basis) {
        int match = -1;
        for (int r : sigma.ray_indices) {
            Int pairing = dot(nu, fan.rays[r]);
            if (pairing == 1) {
                if (match >= 0) throw Error("chart pairing is not a permutation");
                match = r;
            } else if (pairing != 0) {
                throw Error("chart pairing is not dual");
            }
        }
        ch.matched_rays.push_back(match);
    }
    return ch;
}

/// Chart on the patch of tau whose last coordinates cut out the subvariety of
/// the rays in `last`: dual basis vectors pairing with those rays are moved to
/// the end, lexicographic order preserved within both groups.  This single
/// derivation is shared by the chain finder (which emits the order) and the
/// residue check (which consumes it).
inline Chart residue_chart(const Fan& fan, const Cone& tau, const Cone& last) {
    std::vector<int> missing;
    for (int r : last.ray_indices)
        if (!tau.contains(r)) missing.push_back(r);
    if (!missing.empty()) {
        std::string idx;
        for (int r : missing) idx += (idx.empty() ? "" : ", ") + std::to_string(r);
        throw Error("coordinate ordering mismatch: rays " + idx +
                    " of the component are not in the chart cone");
    }
    Chart ch = chart(fan, tau);
    Chart ordered;
    ordered.cone = ch.cone;
    for (std::size_t i = 0; i < ch.dual_basis.size(); ++i)
        if (!last.contains(ch.matched_rays[i])) {
            ordered.dual_basis.push_back(ch.dual_basis[i]);
            ordered.matched_rays.push_back(ch.matched_rays[i]);
        }
    for (std::size_t i = 0; i < ch.dual_basis.size(); ++i)
        if (last.contains(ch.matched_rays[i])) {
            ordered.dual_basis.push_back(ch.dual_basis[i]);
            ordered.matched_rays.push_back(ch.matched_rays[i]);
        }
    return ordered;
}

/// Divisor class group A_(N-1)(V) as the cokernel of the character map
/// Z^N -> Z^(rays), computed from the Smith normal form of the ray matrix.
/// Reporting only; no algebra is built on it.
struct ClassGroup {
    int free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1
};

inline ClassGroup class_group(const Fan& fan) {
    IntMatrix rays = IntMatrix::from_rows(fan.rays);  // S x N
    auto f = smith_normal_form(rays);
    ClassGroup g;
    int rank = 0;
    for (const auto& d : snf_diagonal(f))
        if (d != 0) {
            ++rank;
            if (d > 1) g.torsion.push_back(d);
        }
    g.free_rank = fan.num_rays() - rank;
    return g;
}

}  // namespace mumo
