#pragma once

#include <cstdint>
#include <vector>

#include "hochlat/algebra.hpp"
#include "hochlat/chains.hpp"

namespace hochlat {

/// The explicit contracting homotopy for the free unital semilattice algebra
/// on k generators. All 2^k diagonal elements u_J are precomputed and their
/// defining identities validated at construction; apply_s evaluates
///
///   s_n(a_0 ⊗ ... ⊗ a_n) = sum_{J} a_0 u_J ⊗ u_J ⊗ a_1 ⊗ ... ⊗ a_n
///
/// lazily per basis tensor, with s_0 = 0.
class HomotopyFree {
 public:
  explicit HomotopyFree(int k, const Caps& caps = {});

  int k() const { return k_; }
  const TablePtr& table() const { return table_; }
  const AlgebraElement& u(std::uint32_t j_mask) const;

  /// s_n applied to a degree-n chain over the free table; result degree n+1.
  Chain apply_s(int n, const Chain& c) const;

  /// Exact l1 operator norm of s_n (max image norm over the primitive-tensor
  /// basis of degree n). Bounded by 5^k.
  Rational s_operator_norm(int n, const Caps& caps = {}) const;

  /// sum_J |u_J|^2, the quantity behind the 5^k bound.
  Rational u_norm_square_sum() const;

 private:
  int k_;
  TablePtr table_;
  std::vector<AlgebraElement> u_;  // indexed by subset bitmask
};

/// Exact l1 operator norm of a basis-indexed linear map on degree-n chains:
/// the maximum image norm over all primitive tensors.
Rational operator_l1_norm(const TablePtr& s, int degree,
                          const std::function<Chain(const Tuple&)>& map,
                          const Caps& caps = {});

struct HomotopyCheckRecord {
  int k = 0;
  int n = 0;
  bool identity_verified = false;  // d_n s_n + s_{n-1} d_{n-1} = id on every basis tensor
  Rational exact_norm;             // |s_n|
  Rational bound;                  // 5^k
};

/// Runs the homotopy identity and norm checks for degrees 1..nmax.
std::vector<HomotopyCheckRecord> homotopy_check(int k, int nmax, const Caps& caps = {});

}  // namespace hochlat
