#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsurf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

/// gcd of a vector, ignoring signs; returns 0 for the zero vector.
inline Int gcd_vec(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, boost::multiprecision::abs(x));
    return g;
}

inline std::string int_to_string(const Int& x) { return x.str(); }

/// Renders p/q with no whitespace; integers render without the slash.
inline std::string rat_to_string(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

/// Accepts "n" or "p/q" with optional leading minus signs.
inline Rat parse_rational(const std::string& s) {
    auto bad = [&]() { return std::runtime_error("malformed rational: " + s); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (...) {
        throw bad();
    }
}

}  // namespace tsurf
