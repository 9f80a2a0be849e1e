#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mumo/laurent.hpp"

#include <random>

using namespace mumo;

namespace {

LaurentPoly random_poly(std::mt19937& gen, int nvars, int nterms) {
    std::uniform_int_distribution<int> exp(-3, 3), coef(-4, 4), deg(0, 2);
    LaurentPoly p(nvars);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(nvars);
        for (auto& x : e) x = exp(gen);
        TPoly c;
        for (int d = 0, top = deg(gen); d <= top; ++d) c.c.push_back(Rat(coef(gen)));
        c.normalize();
        p.add_term(e, c);
    }
    return p;
}

}  // namespace

TEST_CASE("derivatives") {
    // d/dz1 (z1^2 z2) = 2 z1 z2
    LaurentPoly p = LaurentPoly::monomial(2, {2, 1}, 1);
    CHECK(partial_derivative(p, 0) == LaurentPoly::monomial(2, {1, 1}, 2));

    // derivative kills constants, keeps negative exponents honest
    LaurentPoly q = LaurentPoly::monomial(2, {-1, 0}, 3);
    CHECK(partial_derivative(q, 0) == LaurentPoly::monomial(2, {-2, 0}, -3));
    CHECK(partial_derivative(LaurentPoly::one(2), 0).is_zero());
}

TEST_CASE("constant term") {
    LaurentPoly p(2);
    p.add_term({1, 0}, TPoly::constant(1));
    p.add_term({0, 0}, TPoly::constant(3));
    p.add_term({0, -1}, TPoly::constant(1));
    CHECK(p.constant_term().at_t_zero() == 3);
    CHECK(LaurentPoly::one(2).constant_term().at_t_zero() == 1);
}

TEST_CASE("ring identities with the deformation parameter") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly f = random_poly(gen, 2, 4);
        LaurentPoly one = LaurentPoly::one(2);
        LaurentPoly tf = times_t(f);
        // (1 - t f)(1 + t f) = 1 - t^2 f^2
        LaurentPoly lhs = mul(sub(one, tf), add(one, tf));
        LaurentPoly rhs = sub(one, mul(tf, tf));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("mixed partials commute") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 25; ++trial) {
        LaurentPoly f = random_poly(gen, 3, 6);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(partial_derivative(partial_derivative(f, i), j) ==
                      partial_derivative(partial_derivative(f, j), i));
    }
}

TEST_CASE("set_t_zero is literal substitution") {
    LaurentPoly f(1);
    TPoly c;
    c.c = {Rat(2), Rat(-1)};  // 2 - t
    f.add_term({5}, c);
    TPoly only_t;
    only_t.c = {Rat(0), Rat(7)};  // 7t
    f.add_term({1}, only_t);
    LaurentPoly f0 = set_t_zero(f);
    CHECK(f0 == LaurentPoly::monomial(1, {5}, 2));  // the pure-t term vanished
}

TEST_CASE("addition and multiplication are consistent") {
    std::mt19937 gen(23);
    for (int trial = 0; trial < 15; ++trial) {
        LaurentPoly a = random_poly(gen, 2, 4);
        LaurentPoly b = random_poly(gen, 2, 4);
        LaurentPoly c = random_poly(gen, 2, 3);
        CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(add(a, sub(b, a)) == b);
    }
}

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly p(2);
    p.add_term({1, 1}, TPoly::constant(2));
    p.add_term({1, 1}, TPoly::constant(-2));
    CHECK(p.is_zero());
    CHECK(p.terms.empty());
}
