#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "flimsy/error.hpp"

namespace flimsy {

// Exact rational arithmetic.  Every fraction is kept in lowest terms with a
// positive denominator; no floating point anywhere in the library.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rat_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rat rat_parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(BigInt(std::string(text)));
        }
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        require(den != 0, "BadRational", "zero denominator in '" + std::string(text) + "'");
        return Rat(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("BadRational", "cannot parse rational '" + std::string(text) + "'");
    }
}

inline bool rat_in_unit_interval(const Rat& r) { return r >= 0 && r <= 1; }

// Wraps into [0, 1); used for points on the rational circle.
inline Rat rat_mod1(const Rat& r) {
    Rat v = r;
    while (v < 0) v += 1;
    while (v >= 1) v -= 1;
    return v;
}

}  // namespace flimsy
