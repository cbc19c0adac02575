#ifndef PPT_RATIONAL_HPP
#define PPT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ppt {

// GMP keeps mpq_class canonical (gcd 1, positive denominator) after every
// arithmetic operation. Beware of `auto` with gmpxx expression templates.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "a/b" or a finite decimal "a.bcd" (optionally signed) exactly.
/// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is one, otherwise "a/b".
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace ppt

#endif  // PPT_RATIONAL_HPP
