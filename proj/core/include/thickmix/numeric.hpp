#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace thickmix {

/// Exact signed integer of unbounded width. Small values stay inline.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational in canonical form (reduced, positive denominator).
using Rational = boost::multiprecision::mpq_rational;

Integer pow3(unsigned e);

/// Length of the Chacon block of depth n, (3^{n+1} - 1) / 2.
Integer chacon_length(unsigned n);

/// Same as chacon_length but as a machine integer; throws when it does not fit.
std::int64_t chacon_length_i64(unsigned n);

bool fits_i64(const Integer& x);
std::int64_t to_i64(const Integer& x);

/// "p/q" with q > 0, always including the denominator.
std::string to_fraction_string(const Rational& r);

/// Inverse of to_fraction_string; also accepts a bare integer "p".
Rational parse_rational(const std::string& s);

Integer floor(const Rational& r);

/// Fractional part in [0, 1).
Rational frac(const Rational& r);

}  // namespace thickmix
