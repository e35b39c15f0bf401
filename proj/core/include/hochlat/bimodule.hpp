#pragma once

#include <memory>
#include <vector>

#include "hochlat/matrix.hpp"
#include "hochlat/semilattice.hpp"

namespace hochlat {

/// A finite-dimensional two-sided module over the convolution algebra,
/// given by explicit action matrices per algebra basis element. Validation
/// checks the bimodule axioms exhaustively on the basis:
///
///   L(st) = L(s)L(t),   R(st) = R(t)R(s),   L(s)R(t) = R(t)L(s)
///
/// `symmetric` (L == R pointwise) and `unit_linked` (the unit acts as the
/// identity) are derived flags.
struct Bimodule {
  TablePtr base;
  int dim = 0;
  std::vector<RationalMatrix> left;   // one dim x dim matrix per basis element
  std::vector<RationalMatrix> right;
  bool symmetric = false;
  bool unit_linked = false;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

BimodulePtr validate_bimodule(TablePtr base, int dim, std::vector<RationalMatrix> left,
                              std::vector<RationalMatrix> right);

/// M = A with the multiplication action.
BimodulePtr regular_bimodule(const TablePtr& s);

/// M = A', the coordinate dual: L'(s) = R(s)^T, R'(s) = L(s)^T.
BimodulePtr dual_bimodule(const TablePtr& s);

/// The zero module (dim 0).
BimodulePtr zero_bimodule(const TablePtr& s);

/// Extends a module over S to the unitization of S: old elements act as
/// before, the adjoined unit acts as the identity. `unitized` must be the
/// table produced by unitize() from m->base (unit appended last).
BimodulePtr unitize_bimodule(const Bimodule& m, const TablePtr& unitized);

}  // namespace hochlat
