#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "toruscolor/errors.hpp"

namespace toruscolor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q omitted when 1, so whole numbers print bare ("0", "-6").
inline std::string rational_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Accepts "p/q" or a bare integer.
inline Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw input_error("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("cannot parse rational: " + s);
    }
}

} // namespace toruscolor
