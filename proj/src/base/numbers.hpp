#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dahazeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& b, unsigned e) {
    Int r = 1, x = b;
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (b == 0) throw std::domain_error("rat_pow: 0^negative");
        return Rat(1) / rat_pow(b, -e);
    }
    Rat r = 1, x = b;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

inline long rat_to_long(const Rat& r, const char* what = "value") {
    if (denominator(r) != 1)
        throw std::domain_error(std::string(what) + ": expected integer, got fraction");
    const Int& n = numerator(r);
    if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min())
        throw std::overflow_error(std::string(what) + ": out of long range");
    return static_cast<long>(n);
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace dahazeta
