#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <stdexcept>
#include <string>

namespace tropeig {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar, the ground arithmetic for every computation in this
/// library. Values are always canonical: gcd-reduced with positive denominator
/// (maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den accepting either sign of den. Throws on den == 0.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q" with optional leading sign on either part.
inline Rational rational_from_string(const std::string& text) {
    auto fail = [&]() -> void { throw std::invalid_argument("not a rational: '" + text + "'"); };
    auto parse_int = [&](const std::string& part) -> BigInt {
        std::size_t k = 0;
        if (!part.empty() && (part[0] == '+' || part[0] == '-')) k = 1;
        if (k == part.size()) fail();
        for (std::size_t i = k; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) fail();
        }
        BigInt value(part.substr(k));
        return part[0] == '-' ? BigInt(-value) : value;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace tropeig
