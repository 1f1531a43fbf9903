#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sunflower {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p", "p/q" or "-p/q".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

Rational rpow(const Rational& x, unsigned n);
// Generalised binomial x(x-1)...(x-n+1)/n!.
Rational binom(const Rational& x, unsigned n);
// Floor of a rational as a big integer.
BigInt floor_of(const Rational& x);
long double to_long_double(const Rational& x);

} // namespace sunflower
