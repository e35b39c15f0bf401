#pragma once

#include <gmpxx.h>

#include <string>

namespace hochlat {

/// Exact scalar type. Everything in the toolkit (boundaries, homotopies,
/// splitting chains) has rational coefficients, and ranks over the rationals
/// agree with ranks over any field extension, so no floating point appears
/// anywhere.
using Rational = mpq_class;

/// Parses "n" or "n/d" (arbitrary precision, optional sign). Throws IoError
/// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical form: lowest terms, positive denominator, "/1" omitted.
std::string format_rational(const Rational& q);

}  // namespace hochlat
