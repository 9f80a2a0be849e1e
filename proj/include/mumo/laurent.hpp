#pragma once

#include <cstdint>
#include <map>

#include "mumo/core.hpp"

namespace mumo {

/// Univariate polynomial in the deformation parameter t, dense ascending
/// coefficients, exact rationals.  The zero polynomial has no coefficients.
struct TPoly {
    std::vector<Rat> c;

    static TPoly zero() { return {}; }
    static TPoly constant(const Rat& x) {
        TPoly p;
        if (x != 0) p.c.push_back(x);
        return p;
    }
    static TPoly t_times(const TPoly& p) {  // multiply by t
        if (p.is_zero()) return {};
        TPoly q;
        q.c.push_back(Rat(0));
        q.c.insert(q.c.end(),
                   p.c.begin(), p.c.end());
        return q;
    }

    bool is_zero() const { return c.empty(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    Rat at_t_zero() const { return c.empty() ? Rat(0) : c[0]; }

    TPoly operator+(const TPoly& o) const {
        TPoly r;
        r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
        r.normalize();
        return r;
    }
    TPoly operator-() const {
        TPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    TPoly operator-(const TPoly& o) const { return *this + (-o); }
    TPoly operator*(const TPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        TPoly r;
        r.c.assign(c.size() + o.c.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        r.normalize();
        return r;
    }
    TPoly operator*(const Rat& x) const {
        if (x == 0) return {};
        TPoly r = *this;
        for (auto& y : r.c) y *= x;
        return r;
    }
    bool operator==(const TPoly& o) const { return c == o.c; }
};

using Exponents = std::vector<std::int64_t>;

/// Laurent polynomial in N torus variables whose coefficients are exact
/// rational polynomials in t.  No zero coefficients are stored; term order
/// is the deterministic lexicographic map order.
struct LaurentPoly {
    int nvars = 0;
    std::map<Exponents, TPoly> terms;

    LaurentPoly() = default;
    explicit LaurentPoly(int n) : nvars(n) {}

    static LaurentPoly one(int n) {
        LaurentPoly p(n);
        p.terms[Exponents(n, 0)] = TPoly::constant(1);
        return p;
    }
    static LaurentPoly monomial(int n, const Exponents& e, const Rat& c) {
        LaurentPoly p(n);
        if (int(e.size()) != n) throw Error("monomial exponent vector of wrong length");
        if (c != 0) p.terms[e] = TPoly::constant(c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    std::size_t num_terms() const { return terms.size(); }

    void add_term(const Exponents& e, const TPoly& c) {
        if (int(e.size()) != nvars) throw Error("term exponent vector of wrong length");
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool operator==(const LaurentPoly& o) const {
        return nvars == o.nvars && terms == o.terms;
    }

    std::int64_t min_exponent() const {
        std::int64_t m = 0;
        for (const auto& [e, c] : terms)
            for (auto x : e) m = std::min(m, x);
        return m;
    }

    /// Coefficient of z^0, a polynomial in t.
    TPoly constant_term() const {
        auto it = terms.find(Exponents(nvars, 0));
        return it == terms.end() ? TPoly::zero() : it->second;
    }
};

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars != b.nvars) throw Error("laurent add: variable count mismatch");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars != b.nvars) throw Error("laurent mul: variable count mismatch");
    LaurentPoly r(a.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Exponents e(a.nvars);
            for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

inline LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly nb = b;
    for (auto& [e, c] : nb.terms) c = -c;
    return add(a, nb);
}

/// d/dz_i: maps z^v to v_i z^(v - e_i).
inline LaurentPoly partial_derivative(const LaurentPoly& p, int i) {
    if (i < 0 || i >= p.nvars) throw Error("derivative variable out of range");
    LaurentPoly r(p.nvars);
    for (const auto& [e, c] : p.terms) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, c * Rat(e[i]));
    }
    return r;
}

/// Literal substitution t = 0.
inline LaurentPoly set_t_zero(const LaurentPoly& p) {
    LaurentPoly r(p.nvars);
    for (const auto& [e, c] : p.terms) {
        Rat c0 = c.at_t_zero();
        if (c0 != 0) r.add_term(e, TPoly::constant(c0));
    }
    return r;
}

inline LaurentPoly scale(const LaurentPoly& p, const Rat& x) {
    LaurentPoly r(p.nvars);
    if (x == 0) return r;
    for (const auto& [e, c] : p.terms) r.terms[e] = c * x;
    return r;
}

/// Multiply every coefficient by t.
inline LaurentPoly times_t(const LaurentPoly& p) {
    LaurentPoly r(p.nvars);
    for (const auto& [e, c] : p.terms) r.terms[e] = TPoly::t_times(c);
    return r;
}

}  // namespace mumo
