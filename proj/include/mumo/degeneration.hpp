#pragma once

#include "mumo/sections.hpp"

namespace mumo {

/// Partition pi_1, ..., pi_k of the ray set: disjoint nonempty blocks whose
/// union is all ray indices.
struct Partition {
    std::vector<std::vector<int>> blocks;

    int num_blocks() const { return int(blocks.size()); }

    void validate(int num_rays) const {
        if (blocks.empty()) throw Error("partition must have at least one block");
        std::vector<int> count(num_rays, 0);
        for (const auto& b : blocks) {
            if (b.empty()) throw Error("partition block is empty");
            for (int r : b) {
                if (r < 0 || r >= num_rays) throw Error("partition ray index out of range");
                ++count[r];
            }
        }
        for (int r = 0; r < num_rays; ++r) {
            if (count[r] == 0)
                throw Error("partition misses ray " + std::to_string(r));
            if (count[r] > 1)
                throw Error("partition blocks overlap at ray " + std::to_string(r));
        }
    }

    /// Index of the block containing ray r.
    int block_of(int r) const {
        for (int i = 0; i < num_blocks(); ++i)
            for (int x : blocks[i])
                if (x == r) return i;
        throw Error("ray " + std::to_string(r) + " is in no block");
    }
};

inline Partition single_block_partition(int num_rays) {
    Partition p;
    p.blocks.emplace_back();
    for (int r = 0; r < num_rays; ++r) p.blocks[0].push_back(r);
    return p;
}

/// True iff some maximal cone contains all given rays.  For the smooth
/// simplicial fans supported here this is exactly "tau generates a cone".
inline bool cone_membership(const Fan& fan, const Cone& tau) {
    for (int r : tau.ray_indices)
        if (r < 0 || r >= fan.num_rays()) throw Error("cone membership: ray index out of range");
    for (const auto& mc : fan.max_cones)
        if (mc.contains_all(tau)) return true;
    return false;
}

/// One-parameter complete-intersection family G_{i,t} = t F_i - prod x_rho
/// determined by a fan, a partition of its rays and one section per block.
struct FamilySpec {
    Fan fan;
    Partition partition;
    std::vector<Section> sections;  // one per block

    int k() const { return partition.num_blocks(); }
    int n() const { return fan.rank - k(); }

    void validate() const {
        partition.validate(fan.num_rays());
        if (n() < 1) throw Error("family needs n = N - k >= 1");
        if (!sections.empty() && int(sections.size()) != k())
            throw Error("family needs one section per partition block");
    }
};

/// Family with default sections: all-ones coefficient tables on each block
/// divisor.  Only combinatorial data feeds components and the nerve, so the
/// default is harmless there; residue work may pass custom sections.
inline FamilySpec make_family(Fan fan, Partition partition, std::vector<Section> sections = {}) {
    FamilySpec spec{std::move(fan), std::move(partition), std::move(sections)};
    spec.validate();
    if (spec.sections.empty()) {
        for (const auto& block : spec.partition.blocks)
            spec.sections.push_back(ones_section(spec.fan, block_divisor(spec.fan, block)));
    }
    return spec;
}

using Component = Cone;  // transversal sigma with |sigma ∩ pi_i| = 1, a cone of the fan

/// All components of X_0: partition transversals whose rays generate a cone,
/// sorted canonically.  May be empty.
inline std::vector<Component> components(const Fan& fan, const Partition& partition) {
    partition.validate(fan.num_rays());
    std::vector<Component> out;
    std::vector<int> pick(partition.num_blocks(), 0);
    while (true) {
        std::vector<int> rays;
        for (int b = 0; b < partition.num_blocks(); ++b)
            rays.push_back(partition.blocks[b][pick[b]]);
        Cone sigma(std::move(rays));
        if (cone_membership(fan, sigma)) out.push_back(std::move(sigma));
        int b = partition.num_blocks() - 1;
        while (b >= 0 && pick[b] + 1 == int(partition.blocks[b].size())) {
            pick[b] = 0;
            --b;
        }
        if (b < 0) break;
        ++pick[b];
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Component> components(const FamilySpec& spec) {
    return components(spec.fan, spec.partition);
}

inline bool is_component(const Fan& fan, const Partition& partition, const Cone& sigma) {
    if (sigma.size() != partition.num_blocks()) return false;
    std::vector<int> hits(partition.num_blocks(), 0);
    for (int r : sigma.ray_indices) ++hits[partition.block_of(r)];
    for (int h : hits)
        if (h != 1) return false;
    return cone_membership(fan, sigma);
}

/// Nonempty intersection of a set of components; dimension N - |union of rays|.
struct Stratum {
    std::vector<int> component_indices;  // sorted indices into components()
    Cone rays;                           // union of the components' rays
    int dim = 0;
};

/// All nonempty intersections of component subsets.  Nonemptiness of a subset
/// S is cone membership of the union of the rays; only nonempty intersections
/// are materialized.  Enumerated by monotone growth (subsets of nonempty sets
/// are nonempty).
inline std::vector<Stratum> strata(const FamilySpec& spec) {
    auto comps = components(spec);
    if (comps.empty()) throw Error("degeneration is empty; no strata");
    if (comps.size() > 20) throw Error("too many components for subset enumeration");
    std::vector<Stratum> out;
    struct Node {
        std::vector<int> idx;
        Cone rays;
    };
    std::vector<Node> frontier;
    for (int i = 0; i < int(comps.size()); ++i) {
        frontier.push_back({{i}, comps[i]});
        out.push_back({{i}, comps[i], spec.fan.rank - comps[i].size()});
    }
    while (!frontier.empty()) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            for (int j = node.idx.back() + 1; j < int(comps.size()); ++j) {
                Cone u = cone_union(node.rays, comps[j]);
                if (!cone_membership(spec.fan, u)) continue;
                auto idx = node.idx;
                idx.push_back(j);
                out.push_back({idx, u, spec.fan.rank - u.size()});
                next.push_back({std::move(idx), std::move(u)});
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
        if (a.component_indices.size() != b.component_indices.size())
            return a.component_indices.size() < b.component_indices.size();
        return a.component_indices < b.component_indices;
    });
    return out;
}

/// Fixed-point chain of a component sigma_0: a maximal cone tau containing
/// sigma_0 and the n components sigma_j obtained by swapping one generator of
/// sigma_0 for a leftover generator of tau within its block.  The union of
/// sigma_0 and the chain is tau, a toric fixed point.  The emitted coordinate
/// order places the variables cutting out C_sigma0 last, ready for the
/// residue-limit check.
struct FixedPointChain {
    Cone tau;
    std::vector<Component> chain;
    std::vector<int> coordinate_rays;  // matched rays of the ordered patch chart
};

inline FixedPointChain find_fixed_point_chain(const Fan& fan, const Partition& partition,
                                              const Component& sigma0) {
    if (!is_component(fan, partition, sigma0))
        throw Error("fixed point chain: sigma0 is not a component");
    const Cone* tau = nullptr;
    for (const auto& mc : fan.max_cones)
        if (mc.contains_all(sigma0)) { tau = &mc; break; }
    if (!tau) throw Error("no maximal cone contains the component");
    FixedPointChain res;
    res.tau = *tau;
    for (int rho : tau->ray_indices) {
        if (sigma0.contains(rho)) continue;
        int block = partition.block_of(rho);
        std::vector<int> rays;
        for (int r : sigma0.ray_indices)
            if (partition.block_of(r) != block) rays.push_back(r);
        rays.push_back(rho);
        res.chain.emplace_back(std::move(rays));
    }
    res.coordinate_rays = residue_chart(fan, res.tau, sigma0).matched_rays;
    return res;
}

inline FixedPointChain find_fixed_point_chain(const FamilySpec& spec, const Component& sigma0) {
    return find_fixed_point_chain(spec.fan, spec.partition, sigma0);
}

/// The paper's claimed component count for the projective CI family.  The
/// brute-force transversal count below disagrees with it (see the monodromy
/// report warning); both are reported, neither is asserted.
inline Int claimed_component_count(const std::vector<int>& degrees) {
    Int prod = 1;
    for (int d : degrees) prod *= (d - 1);
    return prod;
}

/// One-parameter CI family in P^(n+k): fan of P^(n+k), partition blocks of
/// sizes n_i over the rays in index order, Fermat-type sections.
inline FamilySpec projective_ci_family(int n, const std::vector<int>& degrees) {
    if (n < 1) throw Error("projective CI family needs n >= 1");
    const int k = int(degrees.size());
    if (k < 1) throw Error("projective CI family needs at least one degree");
    int sum = 0;
    for (int d : degrees) {
        if (d < 2) throw Error("degrees must be at least 2");
        sum += d;
    }
    if (sum != n + k + 1)
        throw Error("degree sum mismatch: need sum n_i = n + k + 1, got " +
                    std::to_string(sum) + " for n = " + std::to_string(n) +
                    ", k = " + std::to_string(k));
    Fan fan = build_projective_fan(n + k);
    Partition part;
    int next = 0;
    for (int d : degrees) {
        std::vector<int> block;
        for (int i = 0; i < d; ++i) block.push_back(next++);
        part.blocks.push_back(std::move(block));
    }
    std::vector<Section> sections;
    for (const auto& block : part.blocks)
        sections.push_back(fermat_section(fan, block_divisor(fan, block)));
    return make_family(std::move(fan), std::move(part), std::move(sections));
}

}  // namespace mumo
