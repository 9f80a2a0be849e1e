#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mumo {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// No floating point is used anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Domain error (invalid input data, violated precondition, inconsistent oracle).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

using LatVec = std::vector<Int>;  // integer lattice vector
using RatVec = std::vector<Rat>;  // rational vector

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rat& q) { return den(q) == 1; }

inline bool is_integral(const RatVec& v) {
    for (const auto& q : v)
        if (!is_integral(q)) return false;
    return true;
}

inline LatVec to_lattice(const RatVec& v) {
    LatVec out;
    out.reserve(v.size());
    for (const auto& q : v) {
        if (!is_integral(q)) throw Error("vector is not integral");
        out.push_back(num(q));
    }
    return out;
}

inline RatVec to_rational(const LatVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(Rat(x));
    return out;
}

inline bool is_zero(const LatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int dot(const LatVec& a, const LatVec& b) {
    if (a.size() != b.size()) throw Error("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const LatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline LatVec add(const LatVec& a, const LatVec& b) {
    LatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline LatVec negate(const LatVec& a) {
    LatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

inline std::string to_string(const Int& x) { return x.str(); }

/// Rationals print as "p" or "p/q"; this is also the JSON wire format.
inline std::string to_string(const Rat& q) {
    if (is_integral(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw Error("rational with zero denominator: " + s);
    return Rat(p, q);
}

}  // namespace mumo
