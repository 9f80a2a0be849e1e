#pragma once

#include <functional>
#include <sstream>

#include "mumo/degeneration.hpp"

namespace mumo {

/// Finite simplicial complex: cells per dimension as sorted vertex lists.
/// Construction checks downward closure and boundary-squared-zero.
struct CellComplex {
    std::vector<std::vector<std::vector<int>>> cells;  // cells[d], each sorted

    int top_dim() const { return int(cells.size()) - 1; }
    std::size_t num_cells(int d) const {
        return (d >= 0 && d <= top_dim()) ? cells[d].size() : 0;
    }
    std::size_t total_cells() const {
        std::size_t n = 0;
        for (const auto& layer : cells) n += layer.size();
        return n;
    }
    Int euler_characteristic() const {
        Int chi = 0;
        for (int d = 0; d <= top_dim(); ++d)
            chi += (d % 2 == 0 ? Int(1) : Int(-1)) * Int(cells[d].size());
        return chi;
    }
};

/// Signed boundary matrix: rows (d-1)-cells, columns d-cells, with the
/// standard alternating sign convention on sorted vertex lists.
inline IntMatrix boundary_matrix(const CellComplex& cx, int d) {
    if (d <= 0 || d > cx.top_dim()) return IntMatrix(0, int(cx.num_cells(d)));
    std::map<std::vector<int>, int> row_of;
    for (int i = 0; i < int(cx.cells[d - 1].size()); ++i) row_of[cx.cells[d - 1][i]] = i;
    IntMatrix b(int(cx.cells[d - 1].size()), int(cx.cells[d].size()));
    for (int j = 0; j < int(cx.cells[d].size()); ++j) {
        const auto& cell = cx.cells[d][j];
        for (int omit = 0; omit < int(cell.size()); ++omit) {
            std::vector<int> face;
            for (int i = 0; i < int(cell.size()); ++i)
                if (i != omit) face.push_back(cell[i]);
            auto it = row_of.find(face);
            if (it == row_of.end()) throw Error("cell complex is not downward closed");
            b.at(it->second, j) = (omit % 2 == 0) ? 1 : -1;
        }
    }
    return b;
}

inline CellComplex make_complex(std::vector<std::vector<std::vector<int>>> cells) {
    CellComplex cx{std::move(cells)};
    while (!cx.cells.empty() && cx.cells.back().empty()) cx.cells.pop_back();
    for (auto& layer : cx.cells) {
        for (auto& cell : layer) {
            std::sort(cell.begin(), cell.end());
            if (std::adjacent_find(cell.begin(), cell.end()) != cell.end())
                throw Error("cell with repeated vertices");
        }
        std::sort(layer.begin(), layer.end());
        if (std::adjacent_find(layer.begin(), layer.end()) != layer.end())
            throw Error("repeated cell");
    }
    for (int d = 0; d <= cx.top_dim(); ++d)
        for (const auto& cell : cx.cells[d])
            if (int(cell.size()) != d + 1)
                throw Error("cell of wrong dimension");
    // faces present and boundary of boundary vanishes
    for (int d = 1; d <= cx.top_dim(); ++d) boundary_matrix(cx, d);
    for (int d = 2; d <= cx.top_dim(); ++d)
        if (!mul(boundary_matrix(cx, d - 1), boundary_matrix(cx, d)).is_zero())
            throw Error("boundary of boundary is nonzero");
    return cx;
}

/// Rational Betti numbers b_0..b_top via Smith normal form ranks of the
/// integer boundary matrices.
struct HomologyProfile {
    std::vector<long long> betti;

    long long at(int d) const {
        return (d >= 0 && d < int(betti.size())) ? betti[d] : 0;
    }
};

inline HomologyProfile homology(const CellComplex& cx) {
    HomologyProfile h;
    if (cx.cells.empty()) return h;
    std::vector<int> rank(cx.top_dim() + 2, 0);
    for (int d = 1; d <= cx.top_dim(); ++d) rank[d] = snf_rank(boundary_matrix(cx, d));
    for (int d = 0; d <= cx.top_dim(); ++d)
        h.betti.push_back(static_cast<long long>(cx.num_cells(d)) - rank[d] - rank[d + 1]);
    return h;
}

/// Oracle deciding nonemptiness of the common intersection of a component
/// subset (vertex indices, sorted).
using IntersectionOracle = std::function<bool(const std::vector<int>&)>;

/// The nerve: one (|S|-1)-simplex per component subset S with nonempty
/// common intersection.  Detects inconsistent oracles (a set marked nonempty
/// with an empty subset).
inline CellComplex build_clemens_complex(int num_components, const IntersectionOracle& oracle) {
    if (num_components <= 0) throw Error("nerve needs at least one component");
    if (num_components > 20) throw Error("too many components for nerve enumeration");
    std::vector<std::vector<std::vector<int>>> cells;
    std::vector<char> present(std::size_t(1) << num_components, 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << num_components); ++mask) {
        std::vector<int> set;
        for (int i = 0; i < num_components; ++i)
            if (mask & (1u << i)) set.push_back(i);
        bool ok = oracle(set);
        if (ok && set.size() >= 2) {
            for (std::uint32_t bit = mask; bit; bit &= bit - 1) {
                std::uint32_t sub = mask & ~(bit & ~(bit - 1));
                if (!present[sub])
                    throw Error("intersection oracle inconsistency: a nonempty set has an empty subset");
            }
        }
        present[mask] = ok;
        if (ok) {
            int d = int(set.size()) - 1;
            if (d >= int(cells.size())) cells.resize(d + 1);
            cells[d].push_back(std::move(set));
        }
    }
    return make_complex(std::move(cells));
}

inline IntersectionOracle toric_intersection_oracle(const FamilySpec& spec,
                                                    std::vector<Component> comps) {
    return [spec, comps](const std::vector<int>& set) {
        Cone u;
        for (int i : set) u = cone_union(u, comps.at(i));
        return cone_membership(spec.fan, u);
    };
}

/// Nerve of the components of X_0 for a toric CI family.
inline CellComplex clemens_complex(const FamilySpec& spec) {
    auto comps = components(spec);
    if (comps.empty()) throw Error("degeneration empty; no monodromy statement");
    return build_clemens_complex(int(comps.size()), toric_intersection_oracle(spec, comps));
}

/// b_n of the nerve, n = N - k: the number of maximal Jordan blocks
/// (blocks of size n + 1) of the monodromy operator.
inline long long max_jordan_block_count(const FamilySpec& spec) {
    CellComplex cx = clemens_complex(spec);
    return homology(cx).at(spec.n());
}

/// Incidence-file oracle for non-toric inputs: one maximal nonempty component
/// subset per line, comma-separated component indices.  A subset is nonempty
/// iff it is contained in a listed set.
inline IntersectionOracle incidence_oracle(const std::string& text, int& num_components) {
    std::vector<std::vector<int>> maximal;
    std::istringstream in(text);
    std::string line;
    int max_index = -1;
    while (std::getline(in, line)) {
        std::vector<int> set;
        std::string tok;
        std::istringstream ls(line);
        while (std::getline(ls, tok, ',')) {
            auto first = tok.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            auto last = tok.find_last_not_of(" \t\r");
            set.push_back(std::stoi(tok.substr(first, last - first + 1)));
        }
        if (set.empty()) continue;
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (int i : set) {
            if (i < 0) throw Error("incidence file: negative component index");
            max_index = std::max(max_index, i);
        }
        maximal.push_back(std::move(set));
    }
    if (maximal.empty()) throw Error("incidence file lists no sets");
    num_components = max_index + 1;
    std::vector<char> appears(num_components, 0);
    for (const auto& s : maximal)
        for (int i : s) appears[i] = 1;
    for (int i = 0; i < num_components; ++i)
        if (!appears[i])
            throw Error("incidence file: component " + std::to_string(i) + " never appears");
    return [maximal](const std::vector<int>& set) {
        for (const auto& m : maximal)
            if (std::includes(m.begin(), m.end(), set.begin(), set.end())) return true;
        return false;
    };
}

// ---------------------------------------------------------------------------
// Hypersurface sphere verification (the boundary-of-Delta correspondence).

struct SphereReport {
    std::vector<std::size_t> cells_per_dim;   // of the nerve = cone subsets per size
    bool bijection_with_cone_sets = false;    // nerve cells == cone subsets, cell for cell
    bool cells_are_delta_cells = false;       // each cone set is a geometric cell of dDelta
    bool order_reversing = false;             // conv containment mirrors stratum containment
    bool betti_is_sphere = false;
    HomologyProfile betti;
    std::vector<long long> expected_betti;
    bool ok() const {
        return bijection_with_cone_sets && cells_are_delta_cells && order_reversing &&
               betti_is_sphere;
    }
};

namespace detail {

/// All nonempty ray subsets generating a cone: subsets of maximal cones.
inline std::vector<std::vector<int>> cone_subsets(const Fan& fan) {
    std::set<std::vector<int>> out;
    for (const auto& mc : fan.max_cones) {
        const auto& idx = mc.ray_indices;
        for (std::uint32_t mask = 1; mask < (1u << idx.size()); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < int(idx.size()); ++i)
                if (mask & (1u << i)) s.push_back(idx[i]);
            out.insert(std::move(s));
        }
    }
    return {out.begin(), out.end()};
}

/// Is x a convex combination of the given affinely independent points?
inline bool in_simplex(const std::vector<RatVec>& pts, const RatVec& x) {
    // solve sum l_i p_i = x, sum l_i = 1 in least dimension via full system
    const int n = int(x.size());
    const int m = int(pts.size());
    RatMatrix a(n + 1, RatVec(m));
    RatVec b(n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) a[i][j] = pts[j][i];
        b[i] = x[i];
    }
    for (int j = 0; j < m; ++j) a[n][j] = 1;
    b[n] = 1;
    // overdetermined: eliminate and check consistency
    int rank = 0;
    for (int c = 0; c < m && rank < n + 1; ++c) {
        int piv = -1;
        for (int i = rank; i < n + 1; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        std::swap(b[rank], b[piv]);
        Rat inv = Rat(1) / a[rank][c];
        for (int i = 0; i < n + 1; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            Rat f = a[i][c] * inv;
            for (int j = c; j < m; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        ++rank;
    }
    for (int i = rank; i < n + 1; ++i)
        if (b[i] != 0) return false;  // inconsistent: x not in the affine hull
    // back out the (unique, by affine independence) coefficients
    RatVec lambda(m, Rat(0));
    int r = 0;
    for (int c = 0; c < m && r < rank; ++c){
        if (a[r][c] == 0) continue;
        lambda[c] = b[r] / a[r][c];
        ++r;
    }
    for (const auto& l : lambda)
        if (l < 0) return false;
    return true;
}

}  // namespace detail

/// Appendix correspondence for the hypersurface family on a smooth complete
/// fan: the nerve of X_0 = union of the D_rho is cell-for-cell the induced
/// simplicial decomposition of the boundary of Delta, the correspondence
/// reverses inclusion of intersections, and the nerve has the homology of
/// the (N-1)-sphere.
inline SphereReport verify_sphere_theorem(const Fan& fan) {
    if (!is_smooth(fan)) throw Error("sphere verification requires a smooth fan");
    if (!is_complete(fan)) throw Error("sphere verification requires a complete fan");
    Polytope delta = delta_polytope(fan);
    SphereReport rep;

    // nerve of X_0 = union of the D_rho: one component per ray
    CellComplex nerve = build_clemens_complex(
        fan.num_rays(), [&fan](const std::vector<int>& set) {
            return cone_membership(fan, Cone(std::vector<int>(set)));
        });

    auto cone_sets = detail::cone_subsets(fan);
    std::set<std::vector<int>> cone_set_lookup(cone_sets.begin(), cone_sets.end());

    // cell-for-cell bijection: nerve cells and cone subsets are the same sets
    std::size_t nerve_cells = nerve.total_cells();
    rep.bijection_with_cone_sets = (nerve_cells == cone_sets.size());
    for (int d = 0; d <= nerve.top_dim(); ++d) {
        rep.cells_per_dim.push_back(nerve.num_cells(d));
        for (const auto& cell : nerve.cells[d])
            if (!cone_set_lookup.count(cell)) rep.bijection_with_cone_sets = false;
    }

    // each cone subset is a geometric (k-1)-cell of the boundary of Delta:
    // its rays lie on a common facet, are affinely independent, and their
    // hull contains no further ray
    rep.cells_are_delta_cells = true;
    for (const auto& s : cone_sets) {
        std::vector<RatVec> pts;
        for (int r : s) pts.push_back(to_rational(fan.rays[r]));
        bool on_facet = false;
        for (const auto& f : delta.facets) {
            bool all = true;
            for (const auto& p : pts)
                if (dot(f.normal, p) != f.offset) all = false;
            if (all) { on_facet = true; break; }
        }
        bool independent = detail::affine_rank(pts) == int(pts.size()) - 1;
        bool exclusive = true;
        for (int r = 0; r < fan.num_rays(); ++r) {
            if (std::find(s.begin(), s.end(), r) != s.end()) continue;
            if (detail::in_simplex(pts, to_rational(fan.rays[r]))) exclusive = false;
        }
        if (!(on_facet && independent && exclusive)) rep.cells_are_delta_cells = false;
    }

    // order reversal: conv(tau) inside conv(tau') iff the stratum of tau
    // contains the stratum of tau', i.e. tau is a subset of tau'
    rep.order_reversing = true;
    for (const auto& s : cone_sets)
        for (const auto& t : cone_sets) {
            std::vector<RatVec> tpts;
            for (int r : t) tpts.push_back(to_rational(fan.rays[r]));
            bool geom = true;
            for (int r : s)
                if (!detail::in_simplex(tpts, to_rational(fan.rays[r]))) geom = false;
            bool comb = std::includes(t.begin(), t.end(), s.begin(), s.end());
            if (geom != comb) rep.order_reversing = false;
        }

    rep.betti = homology(nerve);
    rep.expected_betti.assign(std::size_t(fan.rank), 0);
    if (fan.rank == 1) {
        rep.expected_betti = {2};  // S^0
    } else {
        rep.expected_betti.front() = 1;
        rep.expected_betti.back() = 1;
    }
    rep.betti_is_sphere = rep.betti.betti == rep.expected_betti;
    return rep;
}

// ---------------------------------------------------------------------------
// Reduced geometric-genus bookkeeping.

struct GenusReport {
    long long component_term = 0;   // sum of p_g(C_i): zero on toric strata
    long long strata_form_term = 0; // sum of dim H^0(C_I, Omega^q): zero on toric strata
    long long nerve_term = 0;       // dim H_n of the nerve
    long long total = 0;
    long long expected_cy = 1;
    bool matches_expected = false;
    std::string assumption;
};

/// p_g(X_t) = (component terms) + (stratum form terms) + b_n(nerve).  The
/// first two vanish identically here: smooth complete toric varieties carry
/// no nonzero holomorphic q-forms for q > 0.  That vanishing is recorded as
/// a stated assumption, not computed.
inline GenusReport reduced_genus_check(const FamilySpec& spec) {
    GenusReport rep;
    rep.assumption =
        "holomorphic q-forms (q > 0) vanish on smooth complete toric strata; "
        "term set to 0 by assumption";
    rep.nerve_term = max_jordan_block_count(spec);
    rep.total = rep.component_term + rep.strata_form_term + rep.nerve_term;
    rep.matches_expected = (rep.total == rep.expected_cy);
    return rep;
}

}  // namespace mumo
