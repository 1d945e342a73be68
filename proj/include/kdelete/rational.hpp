#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kdelete {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Euler's number truncated / rounded up at 12 decimals.
Rational e_lower();
Rational e_upper();

/// floor(x^(1/q)) for x >= 0.
BigInt iroot_floor(const BigInt& x, unsigned q);

/// Rational enclosures of x^(1/q) with 1e-12 absolute resolution:
/// root_lower(x,q) <= x^(1/q) <= root_upper(x,q).
Rational root_lower(const Rational& x, unsigned q);
Rational root_upper(const Rational& x, unsigned q);

Rational rpow(const Rational& base, unsigned exponent);
BigInt ipow(const BigInt& base, unsigned exponent);

/// Always "p/q" with q >= 1 in lowest terms.
std::string to_fraction_string(const Rational& x);
double to_double(const Rational& x);

/// Smallest Rational >= x on the 1e-12 grid.
Rational round_up_12(double x);

} // namespace kdelete
