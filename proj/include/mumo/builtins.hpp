#pragma once

#include "mumo/degeneration.hpp"

namespace mumo {

namespace detail {

inline LatVec lv(std::initializer_list<long long> xs) {
    LatVec v;
    for (auto x : xs) v.push_back(Int(x));
    return v;
}

}  // namespace detail

/// Fan over the 9 boundary lattice points of the triangle with vertices
/// (2,-1), (-1,2), (-1,-1): the minimal resolution of P^2 / Z_3, with the
/// 9 consecutive 2-cones of the boundary cycle.
inline Fan example2_fan() {
    using detail::lv;
    std::vector<LatVec> rays = {
        lv({2, -1}), lv({1, 0}),  lv({0, 1}),   lv({-1, 2}), lv({-1, 1}),
        lv({-1, 0}), lv({-1, -1}), lv({0, -1}), lv({1, -1}),
    };
    std::vector<Cone> cones;
    for (int i = 0; i < 9; ++i) cones.push_back(Cone({i, (i + 1) % 9}));
    return Fan(2, std::move(rays), std::move(cones));
}

/// Smooth complete resolution of the fan of P[9,6,1,1,1]: the two singular
/// maximal cones are star-subdivided at the four lattice points
/// (-1,0,0,0), (-1,-1,0,0), (-2,-1,0,0), (-3,-2,0,0), giving 9 rays and 18
/// unimodular cones.  Rays are ordered so that the partition
/// {0,1} {2,3} {4..8} has all four cross pairs as primitive collections.
inline Fan wp96111_resolved_fan() {
    using detail::lv;
    std::vector<LatVec> rays = {
        lv({1, 0, 0, 0}),    // 0
        lv({0, 1, 0, 0}),    // 1
        lv({-2, -1, 0, 0}),  // 2
        lv({-3, -2, 0, 0}),  // 3
        lv({0, 0, 1, 0}),    // 4
        lv({0, 0, 0, 1}),    // 5
        lv({-9, -6, -1, -1}),// 6
        lv({-1, 0, 0, 0}),   // 7
        lv({-1, -1, 0, 0}),  // 8
    };
    std::vector<Cone> cones = {
        Cone({0, 1, 4, 5}), Cone({0, 1, 4, 6}), Cone({0, 1, 5, 6}),
        Cone({0, 4, 5, 8}), Cone({0, 4, 6, 8}), Cone({0, 5, 6, 8}),
        Cone({1, 4, 5, 7}), Cone({1, 4, 6, 7}), Cone({1, 5, 6, 7}),
        Cone({2, 4, 5, 7}), Cone({3, 4, 5, 8}), Cone({2, 3, 4, 5}),
        Cone({2, 4, 6, 7}), Cone({3, 4, 6, 8}), Cone({2, 3, 4, 6}),
        Cone({2, 5, 6, 7}), Cone({3, 5, 6, 8}), Cone({2, 3, 5, 6}),
    };
    return Fan(4, std::move(rays), std::move(cones));
}

/// Partition of the resolved fan realizing the emptiness example: every
/// transversal contains one of the primitive pairs {0,2},{0,3},{1,2},{1,3},
/// so X_0 is empty.
inline Partition wp96111_partition() {
    Partition p;
    p.blocks = {{0, 1}, {2, 3}, {4, 5, 6, 7, 8}};
    return p;
}

inline std::vector<std::string> builtin_fan_names() {
    return {"p1", "p2", "p3", "p4", "p5", "example2", "wp96111"};
}

inline Fan builtin_fan(const std::string& name) {
    if (name == "p1") return build_projective_fan(1);
    if (name == "p2") return build_projective_fan(2);
    if (name == "p3") return build_projective_fan(3);
    if (name == "p4") return build_projective_fan(4);
    if (name == "p5") return build_projective_fan(5);
    if (name == "example2") return example2_fan();
    if (name == "wp96111") return wp96111_resolved_fan();
    throw Error("unknown builtin fan '" + name + "' (try: p1 p2 p3 p4 p5 example2 wp96111)");
}

}  // namespace mumo
