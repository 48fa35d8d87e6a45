#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace beq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// n^e for e >= 0.
inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// Serializes as "num/den" ("num" when den == 1).
inline std::string rat_to_string(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

/// Exact integer square root if n is a perfect square.
inline bool int_sqrt_exact(const Int& n, Int& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

/// Exact rational square root if one exists.
inline bool rat_sqrt_exact(const Rat& x, Rat& root) {
    Int rn, rd;
    if (!int_sqrt_exact(numerator(x), rn) || !int_sqrt_exact(denominator(x), rd)) return false;
    root = Rat(rn, rd);
    return true;
}

} // namespace beq
