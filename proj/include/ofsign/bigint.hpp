#pragma once

#include <gmpxx.h>

#include <string>

namespace ofsign {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

/// "a/b" in lowest terms, or "a" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses "a", "-a", "a/b" or a finite decimal such as "-1.25". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace ofsign
