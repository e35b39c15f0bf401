#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hochlat/algebra.hpp"
#include "hochlat/bimodule.hpp"
#include "hochlat/caps.hpp"
#include "hochlat/matrix.hpp"
#include "hochlat/semilattice.hpp"

namespace hochlat {

using Tuple = std::vector<int>;

/// A degree-n Hochschild chain: a sparse rational vector over (n+1)-tuples
/// of basis indices. Without a coefficient module the chain lives in
/// A tensor A^n and every slot is an algebra basis index; with `module` set
/// the chain lives in M tensor A^n and slot 0 is a module basis index.
struct Chain {
  TablePtr base;
  int degree = 0;
  BimodulePtr module;  // null = simplicial coefficients (M = A)
  std::map<Tuple, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  Rational l1_norm() const;
  Rational coeff(const Tuple& key) const;

  friend bool operator==(const Chain& a, const Chain& b);
};

Chain zero_chain(TablePtr base, int degree, BimodulePtr module = nullptr);

/// Coefficient 1 on one basis tuple. Arity must be degree+1 (slot 0 indexes
/// the module basis when `module` is set).
Chain primitive_tensor(TablePtr base, const Tuple& key, BimodulePtr module = nullptr);

Chain operator+(const Chain& a, const Chain& b);
Chain operator-(const Chain& a, const Chain& b);
Chain operator*(const Rational& c, const Chain& a);

/// The Hochschild boundary of a degree-(n+1) chain:
///
///   d_n(x ⊗ a_1 ⊗ ... ⊗ a_{n+1}) = x·a_1 ⊗ a_2 ⊗ ... ⊗ a_{n+1}
///     + sum_{j=1..n} (-1)^j x ⊗ ... ⊗ a_j a_{j+1} ⊗ ... ⊗ a_{n+1}
///     + (-1)^{n+1} a_{n+1}·x ⊗ a_1 ⊗ ... ⊗ a_n
///
/// with x in the module slot (right action for the first term, left action
/// for the last). Throws UsageError("DegreeTooLow") on degree-0 chains.
Chain boundary(const Chain& c);

/// Applies a semigroup morphism entrywise to each tuple key (the induced map
/// on tensor powers). Simplicial chains only; never increases the l1 norm.
Chain induced_map(const Morphism& theta, const Chain& c);

/// Matrix of d_n in the canonical tuple bases: columns are degree-(n+1)
/// tuples, rows degree-n tuples, both in lexicographic order with the module
/// slot most significant.
RationalMatrix boundary_matrix(const TablePtr& s, int n, const BimodulePtr& module = nullptr,
                               const Caps& caps = {});

/// A degree-n cochain with coefficients in a finite-dimensional module:
/// a total map from n-tuples of basis indices to module coordinate vectors,
/// stored densely as values[m * tuple_count + tuple_index] (module
/// coordinate most significant, matching the chain-side key order).
struct Cochain {
  TablePtr base;
  int degree = 0;
  BimodulePtr module;
  std::vector<Rational> values;

  bool is_zero() const;

  friend bool operator==(const Cochain& a, const Cochain& b);
};

Cochain zero_cochain(TablePtr base, int degree, BimodulePtr module, const Caps& caps = {});

/// The basis cochain sending one n-tuple to one module basis vector.
Cochain basis_cochain(TablePtr base, int degree, BimodulePtr module, const Tuple& key, int m,
                      const Caps& caps = {});

/// The Hochschild coboundary:
///
///   (δF)(a_1,...,a_{n+1}) = a_1·F(a_2,...,a_{n+1})
///     + sum_{j=1..n} (-1)^j F(a_1,...,a_j a_{j+1},...,a_{n+1})
///     + (-1)^{n+1} F(a_1,...,a_n)·a_{n+1}
Cochain coboundary(const Cochain& f, const Caps& caps = {});

/// Matrix of δ_n: columns are degree-n cochain basis elements, rows
/// degree-(n+1), both ordered with the module index most significant
/// (so with dual coefficients this is exactly boundary_matrix transposed).
RationalMatrix coboundary_matrix(const TablePtr& s, int n, const BimodulePtr& module,
                                 const Caps& caps = {});

struct ModuleMapCheck {
  bool ok = true;
  int acting = -1;  // witness: b, tuple with d(b·c) != b·d(c)
  Tuple witness;
};

/// Checks that d_n commutes with the left action on slot 0, i.e.
/// d_n(b·c) = b·d_n(c) for every primitive tensor c of degree n+1.
/// Always true over commutative tables.
ModuleMapCheck module_map_check(const TablePtr& s, int n, int b, const Caps& caps = {});

// Canonical tuple enumeration: mixed radix, slot 0 most significant with
// radix `lead_radix` (the module dimension, or the table size when
// simplicial), remaining slots with radix `radix`.
std::uint64_t tuple_space_dim(int lead_radix, int radix, int arity);
std::uint64_t tuple_to_index(const Tuple& t, int radix);
Tuple index_to_tuple(std::uint64_t index, int lead_radix, int radix, int arity);
void for_each_tuple(int lead_radix, int radix, int arity,
                    const std::function<void(const Tuple&)>& fn);

}  // namespace hochlat
