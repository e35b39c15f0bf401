#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hochlat/caps.hpp"

namespace hochlat {

/// A finite semigroup as a multiplication table. Immutable after
/// validation; share freely via TablePtr.
///
/// `commutative` and `idempotent` are derived by validation, never claimed.
/// The table is a unital semilattice iff commutative && idempotent && unit.
struct SemigroupTable {
  std::vector<std::string> elements;
  std::vector<int> product;  // row-major, size n*n
  std::optional<int> unit;
  bool commutative = false;
  bool idempotent = false;

  int size() const { return static_cast<int>(elements.size()); }
  int mul(int a, int b) const { return product[static_cast<std::size_t>(a) * elements.size() + b]; }
  bool is_unital_semilattice() const { return commutative && idempotent && unit.has_value(); }

  friend bool operator==(const SemigroupTable&, const SemigroupTable&) = default;
};

using TablePtr = std::shared_ptr<const SemigroupTable>;

/// Checks associativity exhaustively (O(n^3)), verifies a claimed unit, or
/// detects one if none is claimed, and derives the commutative/idempotent
/// flags. Throws ValidationError("NonAssociative"|"BadUnit") with the failing
/// witness in the message.
TablePtr validate_table(std::vector<std::string> elements, std::vector<int> product,
                        std::optional<int> unit = std::nullopt, const Caps& caps = {});

/// Power set of {0..k-1} under union; unit is the empty set. Elements are
/// ordered by size then lexicographically, so indices are reproducible.
TablePtr free_unital_semilattice(int k, const Caps& caps = {});

/// Elements 0..n-1 under max; unit is 0.
TablePtr chain_semilattice(int n, const Caps& caps = {});

struct UnitizeResult {
  TablePtr table;
  bool adjoined;  // false when the input already had a unit
};

/// Adjoins a fresh identity (appended last, labelled "1") when the table has
/// none; returns the table unchanged otherwise.
UnitizeResult unitize(const TablePtr& s);

/// A semigroup homomorphism (unit-preserving when both sides are unital).
struct Morphism {
  TablePtr source;
  TablePtr target;
  std::vector<int> map;

  int apply(int i) const { return map[static_cast<std::size_t>(i)]; }
};

/// Verifies map(xy) = map(x)map(y) on all pairs, and unit preservation when
/// both tables are unital. Throws ValidationError("NotHomomorphism"|
/// "UnitNotPreserved") with a witness.
Morphism validate_morphism(TablePtr source, TablePtr target, std::vector<int> map);

Morphism identity_morphism(const TablePtr& s);

/// g after f (throws UsageError("BaseMismatch") unless f.target == g.source).
Morphism compose(const Morphism& g, const Morphism& f);

/// The unique monoid morphism from the free unital semilattice on j+1
/// generators sending generator i to x[i]; a subset J maps to the product
/// of { x[i] : i in J } (empty product = unit). Requires S to be a unital
/// semilattice, since the universal property needs idempotent images.
Morphism substitution_morphism(const TablePtr& s, const std::vector<int>& x,
                               const Caps& caps = {});

// Canonical indexing of the free unital semilattice on k generators.
// Subsets are bitmasks over {0..k-1}; order is by popcount, then
// lexicographic on the sorted element lists.
std::vector<std::uint32_t> subset_order(int k);
int free_subset_index(int k, std::uint32_t mask);
std::string subset_label(std::uint32_t mask);

/// The 3-element commutative monoid {1, n, z} with n*n = z and z absorbing.
/// Not a semilattice; its first simplicial homology group is nonzero, which
/// makes it the standard control for the vanishing checks.
TablePtr null_monoid();

/// All unital semilattice tables on `size` labelled elements, by backtracking
/// over upper-triangular tables (the diagonal is forced by idempotency).
/// Enumerates raw tables, not isomorphism classes.
std::vector<TablePtr> enumerate_unital_semilattices(int size, const Caps& caps = {});

/// All commutative semigroup tables on `size` labelled elements.
/// With `without_unit`, keeps only tables having no identity element.
std::vector<TablePtr> enumerate_commutative_semigroups(int size, bool without_unit,
                                                       const Caps& caps = {});

}  // namespace hochlat
