#ifndef CHERN_RATIONAL_HPP
#define CHERN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace chern {

// All arithmetic in this library is exact: rationals with
// arbitrary-precision integer parts, no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// "p/q" with the "/q" omitted for integers.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q" with optional surrounding spaces.
Rational parse_rational(const std::string& text);

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace chern

#endif
