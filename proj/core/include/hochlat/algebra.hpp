#pragma once

#include <cstdint>
#include <map>

#include "hochlat/rational.hpp"
#include "hochlat/semilattice.hpp"

namespace hochlat {

/// An element of the rational convolution algebra of a semigroup: a sparse
/// coefficient vector over the element basis, kept in canonical form (no
/// stored zeros). Immutable in spirit; all operations return new values.
struct AlgebraElement {
  TablePtr base;
  std::map<int, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  Rational coeff(int s) const;
  Rational l1_norm() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
};

AlgebraElement zero_element(TablePtr base);

/// e_s: coefficient 1 at s. Throws UsageError("IndexOutOfRange").
AlgebraElement basis_element(TablePtr base, int s);

/// e_1 at the unit. Throws UsageError("NotUnital") when there is none.
AlgebraElement unit_element(TablePtr base);

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const Rational& c, const AlgebraElement& a);

/// Bilinear extension of e_s * e_t = e_{st}. Exactly submultiplicative for
/// the l1 norm. Throws UsageError("BaseMismatch") on different base tables.
AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b);

Rational l1_norm(const AlgebraElement& a);

/// The diagonal element for a subset J of the generators of the free unital
/// semilattice on k generators:
///
///   u_J = prod_{i in J} e_{i} * prod_{m not in J} (e_empty - e_{m})
///
/// where e_i is the basis element at the singleton {i}. These are idempotent,
/// their squares sum to the unit, and |u_J|_1 <= 2^(k-|J|).
AlgebraElement u_element(const TablePtr& free_table, int k, std::uint32_t j_mask);
AlgebraElement u_element(int k, std::uint32_t j_mask, const Caps& caps = {});

}  // namespace hochlat
