#pragma once

#include "mumo/fan.hpp"
#include "mumo/laurent.hpp"

namespace mumo {

/// Torus-invariant Weil divisor D = sum a_rho D_rho, one coefficient per ray.
struct TorusDivisor {
    std::vector<Int> coeffs;
};

inline TorusDivisor anticanonical_divisor(const Fan& fan) {
    return TorusDivisor{std::vector<Int>(fan.num_rays(), Int(1))};
}

inline TorusDivisor single_ray_divisor(const Fan& fan, int ray) {
    TorusDivisor d{std::vector<Int>(fan.num_rays(), Int(0))};
    d.coeffs.at(ray) = 1;
    return d;
}

inline TorusDivisor block_divisor(const Fan& fan, const std::vector<int>& block) {
    TorusDivisor d{std::vector<Int>(fan.num_rays(), Int(0))};
    for (int r : block) d.coeffs.at(r) = 1;
    return d;
}

/// P_D = { nu : <nu, rho> >= -a_rho for every ray rho }.
inline Polytope section_polytope(const Fan& fan, const TorusDivisor& d) {
    if (int(d.coeffs.size()) != fan.num_rays())
        throw Error("divisor has wrong number of ray coefficients");
    if (!is_complete(fan))
        throw Error("divisor not globally generated at desk scale (fan not complete)");
    std::vector<Facet> facets;
    for (int r = 0; r < fan.num_rays(); ++r)
        facets.push_back(Facet{fan.rays[r], Rat(-d.coeffs[r])});
    return polytope_from_facets(fan.rank, std::move(facets));
}

/// Basis element of H^0(V, O(D)): character nu with its monomial exponents
/// <nu, rho> + a_rho over the rays.
struct SectionBasisElement {
    LatVec nu;
    std::vector<Int> exponents;
};

/// One basis element per lattice point of P_D, in lexicographic nu order.
inline std::vector<SectionBasisElement> section_basis(const Fan& fan, const TorusDivisor& d) {
    Polytope pd = section_polytope(fan, d);
    std::vector<SectionBasisElement> out;
    for (const auto& nu : lattice_points(pd)) {
        SectionBasisElement el;
        el.nu = nu;
        el.exponents.resize(fan.num_rays());
        for (int r = 0; r < fan.num_rays(); ++r) {
            Int e = dot(nu, fan.rays[r]) + d.coeffs[r];
            if (e < 0) throw Error("negative section exponent; lattice point outside P_D");
            el.exponents[r] = e;
        }
        out.push_back(std::move(el));
    }
    return out;
}

/// Coefficient table of a section: rational coefficient per character nu.
/// Used for anticanonical sections (support in nabla) and for the block
/// sections F_i of a family (support in P_{D_i}).
struct Section {
    std::map<LatVec, Rat> coeffs;

    void set(const LatVec& nu, const Rat& c) {
        if (c == 0)
            coeffs.erase(nu);
        else
            coeffs[nu] = c;
    }
};

/// All lattice points of P_D with coefficient 1.
inline Section ones_section(const Fan& fan, const TorusDivisor& d) {
    Section s;
    for (const auto& el : section_basis(fan, d)) s.set(el.nu, 1);
    return s;
}

/// Vertices of P_D with coefficient 1.  On P^N with a degree-m block this is
/// the Fermat polynomial sum of x_rho^m.
inline Section fermat_section(const Fan& fan, const TorusDivisor& d) {
    Polytope pd = section_polytope(fan, d);
    Section s;
    for (const auto& v : pd.vertices) {
        if (!is_integral(v)) throw Error("section polytope vertex is not integral");
        s.set(to_lattice(v), 1);
    }
    return s;
}

/// Check support(f) against the lattice points of the polar dual of Delta.
inline bool section_supported_in_dual(const Fan& fan, const Section& f) {
    for (const auto& [nu, c] : f.coeffs)
        for (const auto& ray : fan.rays)
            if (dot(nu, ray) < -1) return false;
    return true;
}

namespace detail {

inline void require_reflexive_delta(const Fan& fan) {
    if (!is_reflexive(delta_polytope(fan)))
        throw Error("Delta (hull of the rays) is not reflexive");
}

}  // namespace detail

/// Exponent vector of nu in the chart coordinates: v_i = <nu, matched ray i>.
inline std::vector<std::int64_t> chart_exponents(const Fan& fan, const Chart& ch, const LatVec& nu) {
    std::vector<std::int64_t> v(ch.dual_basis.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int p = dot(nu, fan.rays[ch.matched_rays[i]]);
        v[i] = p.convert_to<std::int64_t>();
    }
    return v;
}

/// Local representative of an anticanonical section on the patch U_sigma:
/// f_sigma(z) = z_1...z_N sum_v c_v z^v, a genuine polynomial whenever Delta
/// is reflexive and the support lies in the dual polytope.
inline LaurentPoly local_section(const Fan& fan, const Section& f, const Cone& sigma) {
    if (!is_smooth(fan)) throw Error("local sections require a smooth fan");
    detail::require_reflexive_delta(fan);
    Chart ch = chart(fan, sigma);
    LaurentPoly out(fan.rank);
    for (const auto& [nu, c] : f.coeffs) {
        auto v = chart_exponents(fan, ch, nu);
        for (auto& e : v) e += 1;  // the z_1...z_N prefactor
        out.add_term(v, TPoly::constant(c));
    }
    return out;
}

/// Matrix A with nu_i = sum_j a_ij mu_j, expressing the dual basis of the
/// first chart in that of the second.  Unimodular.
inline IntMatrix transition_matrix(const Fan& fan, const Chart& cs, const Chart& ct) {
    const int n = fan.rank;
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.at(i, j) = dot(cs.dual_basis[i], fan.rays[ct.matched_rays[j]]);
    return a;
}

/// Transition between the canonical charts of two top-dimensional cones.
inline IntMatrix transition_matrix(const Fan& fan, const Cone& sigma, const Cone& tau) {
    return transition_matrix(fan, chart(fan, sigma), chart(fan, tau));
}

/// Exponent-level gluing law between two patches: for every support vector of
/// f on patch sigma, the transition image must be the patch-tau exponent of
/// the same character, and the support must lie in the dual polytope.
inline bool verify_gluing(const Fan& fan, const Section& f, const Cone& sigma, const Cone& tau) {
    Chart cs = chart(fan, sigma);
    Chart ct = chart(fan, tau);
    IntMatrix a = transition_matrix(fan, sigma, tau);
    IntMatrix b = a.transposed();  // exponents transform by z^v = w^(A^T v)
    const int n = fan.rank;
    for (const auto& [nu, c] : f.coeffs) {
        auto vs = chart_exponents(fan, cs, nu);
        auto vt = chart_exponents(fan, ct, nu);
        for (int i = 0; i < n; ++i) {
            Int img = 0;
            for (int j = 0; j < n; ++j) img += b.at(i, j) * Int(vs[j]);
            if (img != Int(vt[i])) return false;
            if (img < -1) return false;  // image leaves nabla_tau
        }
        for (const auto& ray : fan.rays)
            if (dot(nu, ray) < -1) return false;  // support outside nabla
    }
    return true;
}

}  // namespace mumo
