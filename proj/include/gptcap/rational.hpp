#ifndef GPTCAP_RATIONAL_HPP
#define GPTCAP_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "gptcap/errors.hpp"

namespace gptcap {

// Every geometric and LP quantity in this library is an exact GMP rational.
// Doubles appear only in display-layer conversions (bit values, CSV columns).
using Rational = boost::multiprecision::mpq_rational;

// Builds p/q with sign normalized onto the numerator. The two-argument
// mpq_rational constructor treats the denominator as unsigned, so it must
// never see a negative value.
inline Rational ratio(long long num, long long den) {
    if (den == 0) throw ParseError("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Rational r(num, den);
    return r;
}

// Parses "p", "-p", "p/q" or "-p/q". GMP's string constructor does not
// canonicalize, so lowest-terms form is restored explicitly.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::string s(text);
    std::size_t slash = s.find('/');
    auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(s, true)) throw ParseError("malformed rational '" + s + "'");
        return Rational(s);
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw ParseError("malformed rational '" + s + "'");
    Rational d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(s);
    mpq_canonicalize(r.backend().data());
    return r;
}

// "p" when the value is integral, "p/q" otherwise.
inline std::string rat_str(const Rational& r) {
    return r.str();
}

inline double to_double(const Rational& r) {
    return r.template convert_to<double>();
}

// -log2 of a nonnegative rational; +inf at zero. Display-only: orderings are
// always decided on the rational linear scale.
inline double neg_log2(const Rational& r) {
    if (r < 0) throw InvalidParameter("neg_log2 of negative value");
    if (r == 0) return std::numeric_limits<double>::infinity();
    return -std::log2(to_double(r));
}

} // namespace gptcap

#endif
