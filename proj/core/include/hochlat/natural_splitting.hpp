#pragma once

#include <map>
#include <vector>

#include "hochlat/chains.hpp"
#include "hochlat/homotopy_free.hpp"

namespace hochlat {

/// The tower of universal splitting chains. w[j] is a degree-(j+1) chain
/// over the free unital semilattice on j+1 generators, built recursively so
/// that
///
///   d_j(w[j]) = f - sigma_{j-1}(d_{j-1}(f))
///
/// where f is the primitive tensor of the generators. sigma_j on any unital
/// semilattice is then evaluated by pushing w[j] forward along substitution
/// morphisms; sigma_0 = 0.
struct SigmaTower {
  int max_degree = 0;
  std::vector<Chain> w;  // w[j] at index j, 1 <= j <= max_degree; w[0] unused

  const Chain& w_chain(int j) const;
};

/// The generator tuple of the free unital semilattice on j+1 generators,
/// as indices of the singletons {0},...,{j}.
Tuple generator_tuple(const TablePtr& free_table, int j);

/// Builds w[1..j_max]. Each w[j] is verified against its defining identity
/// before the tower is returned (ValidationError("FormalIdentityFailed")
/// would signal an implementation bug).
SigmaTower build_tower(int j_max, const Caps& caps = {});

/// sigma_j on a degree-j chain over a unital semilattice S: zero for j = 0,
/// otherwise the linear extension over primitive tensors x of the
/// substitution pushforward of w[j] along x. The image norm on a primitive
/// tensor never exceeds |w[j]|_1.
Chain apply_sigma(const SigmaTower& t, int j, const TablePtr& s, const Chain& c);

/// Memoizing evaluator for repeated sigma applications over one table;
/// pushforwards of w[j] are cached per tuple.
class SigmaEvaluator {
 public:
  SigmaEvaluator(const SigmaTower& t, TablePtr s);

  Chain apply(int j, const Chain& c);
  const Chain& primitive(int j, const Tuple& x);

 private:
  const SigmaTower& tower_;
  TablePtr table_;
  std::vector<std::map<Tuple, Chain>> cache_;  // per degree
};

struct SplittingDegreeResult {
  int j = 0;
  std::uint64_t checked = 0;
  std::vector<Tuple> failures;
  Rational sigma_norm;  // exact operator norm of sigma_j over this table
  Rational w_norm;      // |w[j]|_1
  bool ok() const { return failures.empty(); }
};

struct SplittingReport {
  std::vector<SplittingDegreeResult> degrees;
  bool ok = true;
};

/// Checks d_j sigma_j + sigma_{j-1} d_{j-1} = id on every primitive tensor
/// of degree j over S, for j in [j_min, j_max]; exact.
SplittingReport verify_splitting(const SigmaTower& t, const TablePtr& s, int j_min, int j_max,
                                 const Caps& caps = {});

struct NaturalityResult {
  int j = 0;
  std::uint64_t checked = 0;
  std::vector<Tuple> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks the naturality square theta^{j+2} . sigma^H_j = sigma^K_j . theta^{j+1}
/// on every primitive tensor of degree j over theta.source; exact.
NaturalityResult verify_naturality(const SigmaTower& t, const Morphism& theta, int j,
                                   const Caps& caps = {});

}  // namespace hochlat
