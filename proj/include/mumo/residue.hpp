#pragma once

#include "mumo/complex.hpp"

namespace mumo {

/// Laurent representative of the block section F_i on the given chart:
/// f_i(z) = sum_nu c_nu z^(<nu, rho_j>)_j on the torus.
inline LaurentPoly block_laurent(const Fan& fan, const Section& f, const Chart& ch) {
    LaurentPoly out(fan.rank);
    for (const auto& [nu, c] : f.coeffs)
        out.add_term(chart_exponents(fan, ch, nu), TPoly::constant(c));
    return out;
}

/// g_t(z) = z_1...z_N (1 - t f_1(z)) ... (1 - t f_k(z)) on the given chart.
/// Polynomial in z for all t when Delta is reflexive.
inline LaurentPoly family_polynomial(const FamilySpec& spec, const Chart& ch) {
    spec.validate();
    if (!is_smooth(spec.fan)) throw Error("family polynomial requires a smooth fan");
    detail::require_reflexive_delta(spec.fan);
    const int n = spec.fan.rank;
    Exponents ones(n, 1);
    LaurentPoly g = LaurentPoly::monomial(n, ones, 1);
    for (const auto& f : spec.sections) {
        LaurentPoly fi = block_laurent(spec.fan, f, ch);
        LaurentPoly factor = sub(LaurentPoly::one(n), times_t(fi));
        g = mul(g, factor);
    }
    if (g.min_exponent() < 0)
        throw Error("family polynomial has a negative exponent; input is not a CY family "
                    "over a reflexive Delta");
    return g;
}

inline LaurentPoly family_polynomial(const FamilySpec& spec, const Cone& sigma) {
    return family_polynomial(spec, chart(spec.fan, sigma));
}

/// The residue-limit identity at the fixed point: with the chart of tau
/// ordered so the last k variables cut out C_sigma0,
///   d_{n+1} ... d_N g_t at t = 0 equals z_1 ... z_n exactly.
inline bool residue_limit_check(const FamilySpec& spec, const Component& sigma0,
                                const Cone& tau) {
    spec.validate();
    if (!is_component(spec.fan, spec.partition, sigma0))
        throw Error("residue check: sigma0 is not a component");
    Chart ch = residue_chart(spec.fan, tau, sigma0);
    LaurentPoly g = family_polynomial(spec, ch);
    const int n = spec.n();
    for (int i = n; i < spec.fan.rank; ++i) g = partial_derivative(g, i);
    LaurentPoly limit = set_t_zero(g);
    Exponents expect(spec.fan.rank, 0);
    for (int i = 0; i < n; ++i) expect[i] = 1;
    return limit == LaurentPoly::monomial(spec.fan.rank, expect, 1);
}

// ---------------------------------------------------------------------------
// The maximal-unipotent-monodromy criterion report.

enum class Verdict { pass, fail, assumed, skipped };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::assumed: return "assumed";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

struct ConditionEntry {
    std::string name;
    Verdict verdict;
    std::string detail;
};

struct MonodromyReport {
    std::vector<ConditionEntry> conditions;
    bool satisfied = false;  // all checkable conditions pass
    std::string verdict_text;
};

/// Check the computable conditions of the maximal-monodromy criterion for a
/// toric CI family: nonempty normal-crossing central fiber with irreducible
/// toric components, a point stratum C_0 cap ... cap C_n reached by a fixed
/// point chain, and the residue local form.  Smoothness of the generic fiber
/// and h^{n,0} >= 1 are analytic input obligations and are recorded as
/// assumed.
inline MonodromyReport verify_max_monodromy_criterion(const FamilySpec& spec) {
    MonodromyReport rep;
    auto push = [&](std::string name, Verdict v, std::string detail) {
        rep.conditions.push_back({std::move(name), v, std::move(detail)});
    };

    push("1: X_t nonsingular of dimension n >= 1", Verdict::assumed,
         "transversality of the F_i is an input obligation (n = " +
             std::to_string(spec.n()) + ")");
    push("2: h^{n,0}(X_t) >= 1", Verdict::assumed,
         "adjunction gives the CY class for the anticanonical partition");

    auto comps = components(spec);
    if (comps.empty()) {
        push("3: X_0 normal crossing with irreducible components", Verdict::fail,
             "X_0 empty: every partition transversal contains a primitive collection");
        push("4: C_0 cap ... cap C_n is a point", Verdict::fail,
             "no components, no fixed point chain");
        push("5: residue limit form dz/z on C_0", Verdict::skipped, "no components");
        rep.satisfied = false;
        rep.verdict_text = "criterion fails: X_0 is empty (condition 4)";
        return rep;
    }
    push("3: X_0 normal crossing with irreducible components", Verdict::pass,
         std::to_string(comps.size()) + " toric components, each nonsingular irreducible");

    bool cond4 = false;
    std::string detail4;
    FixedPointChain fpc;
    try {
        fpc = find_fixed_point_chain(spec, comps[0]);
        Cone u = comps[0];
        for (const auto& c : fpc.chain) u = cone_union(u, c);
        cond4 = (u == fpc.tau) && (u.size() == spec.fan.rank);
        detail4 = "chain of " + std::to_string(fpc.chain.size()) +
                  " components meeting C_0 in the fixed point of a maximal cone";
    } catch (const Error& e) {
        detail4 = e.what();
    }
    push("4: C_0 cap ... cap C_n is a point", cond4 ? Verdict::pass : Verdict::fail, detail4);

    bool cond5 = false;
    std::string detail5;
    if (cond4) {
        try {
            cond5 = residue_limit_check(spec, comps[0], fpc.tau);
            detail5 = cond5 ? "d_{n+1}..d_N g_t at t=0 equals z_1..z_n term for term"
                            : "residue limit differs from z_1..z_n";
        } catch (const Error& e) {
            detail5 = e.what();
        }
        push("5: residue limit form dz/z on C_0", cond5 ? Verdict::pass : Verdict::fail,
             detail5);
    } else {
        push("5: residue limit form dz/z on C_0", Verdict::skipped, "condition 4 failed");
    }

    rep.satisfied = cond4 && cond5;
    rep.verdict_text = rep.satisfied
                           ? "criterion satisfied (combinatorial+symbolic parts)"
                           : "criterion fails at condition " + std::string(cond4 ? "5" : "4");
    return rep;
}

// ---------------------------------------------------------------------------
// Period series by constant-term extraction.

/// Coefficients of the period of Omega_t = dz / (z_1...z_N (1 - t f(z)))
/// over the real N-torus: c_m = CT(f^m), 0 <= m <= M.  The transcendental
/// factor (2 pi i)^N is factored out.
struct PeriodSeries {
    std::vector<Rat> coeffs;
    std::string normalization = "(2*pi*i)^N omitted";
};

inline PeriodSeries period_series(const LaurentPoly& f, int order) {
    if (order < 0) throw Error("period order must be nonnegative");
    for (const auto& [e, c] : f.terms)
        if (c.c.size() > 1) throw Error("period series needs a t-free Laurent polynomial");
    PeriodSeries ps;
    LaurentPoly power = LaurentPoly::one(f.nvars);
    ps.coeffs.push_back(power.constant_term().at_t_zero());
    for (int m = 1; m <= order; ++m) {
        power = mul(power, f);
        ps.coeffs.push_back(power.constant_term().at_t_zero());
    }
    return ps;
}

/// Laurent representative of the anticanonical section of a hypersurface
/// family on the canonical chart of the first maximal cone.  The constant
/// terms of its powers do not depend on the chart choice.
inline LaurentPoly hypersurface_laurent(const FamilySpec& spec) {
    spec.validate();
    if (spec.k() != 1) throw Error("period series needs a hypersurface (single-block) family");
    Chart ch = chart(spec.fan, spec.fan.max_cones.front());
    return block_laurent(spec.fan, spec.sections[0], ch);
}

}  // namespace mumo
