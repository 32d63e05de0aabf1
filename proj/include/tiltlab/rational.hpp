#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tiltlab {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "3", "-2/3", "1.25"; a leading U+2212 minus sign is accepted too.
Rational parse_rational(std::string_view text);

// gmpxx has no long long constructors.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace tiltlab
