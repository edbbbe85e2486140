#ifndef BOSONKIT_RATIONAL_HPP
#define BOSONKIT_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace bosonkit {

// GMP keeps mpq values canonical: positive denominator, reduced, 0 as 0/1.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

[[nodiscard]] bool is_integer(const Rational& r);

// "p/q" or "p"; throws Error(invalid_args) on anything else.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

} // namespace bosonkit

#endif
