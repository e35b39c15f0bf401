#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hochlat/bimodule.hpp"
#include "hochlat/chains.hpp"
#include "hochlat/natural_splitting.hpp"

namespace hochlat {

/// Exact dimension bookkeeping for one degree. For homology the outgoing
/// differential from C_n is d_{n-1} and the incoming one is d_n; for
/// cohomology they are delta_n and delta_{n-1} respectively. In both cases
/// dim H = dim ker(outgoing) - rank(incoming).
struct DegreeRecord {
  int n = 0;
  std::uint64_t dim_space = 0;
  int rank_outgoing = 0;
  int rank_incoming = 0;
  std::uint64_t dim_kernel = 0;  // dim_space - rank_outgoing
  std::uint64_t dim_h = 0;
};

struct HomologyReport {
  std::string table_desc;
  std::string coefficients;
  bool cohomology = false;
  bool unit_linked = false;  // tagged so non-unit-linked coefficient runs are visible
  std::vector<DegreeRecord> degrees;

  bool all_zero() const;
};

/// Homology dimensions of the chain complex M ⊗ A^n for 1 <= n <= nmax.
HomologyReport homology_dims(const TablePtr& s, int nmax, const BimodulePtr& m,
                             const std::string& coeff_label, const Caps& caps = {});

/// Cohomology dimensions of the cochain complex of M-valued multilinear maps.
HomologyReport cohomology_dims(const TablePtr& s, int nmax, const BimodulePtr& m,
                               const std::string& coeff_label, const Caps& caps = {});

struct DualityRecord {
  int n = 0;
  std::uint64_t dim_homology = 0;
  std::uint64_t dim_cohomology = 0;
};

struct DualityReport {
  std::vector<DualityRecord> degrees;
  bool ok = true;  // dim H^n(A, A') == dim H_n(A, A) in every degree
};

DualityReport duality_check(const TablePtr& s, int nmax, const Caps& caps = {});

struct UnitisationRecord {
  int n = 0;
  std::uint64_t dim_unitized = 0;
  std::uint64_t dim_original = 0;
};

struct UnitisationReport {
  std::vector<UnitisationRecord> degrees;
  bool ok = true;
};

/// For a non-unital commutative table S and a symmetric module M over it:
/// extends M unit-linked over the unitization and checks that the cohomology
/// dimensions agree degree by degree (1..nmax).
UnitisationReport unitisation_check(const TablePtr& s, const BimodulePtr& m, int nmax,
                                    const Caps& caps = {});

struct SplitVsVanishReport {
  HomologyReport homology;
  SplittingReport splitting;
  bool ok = true;  // vanishing and the splitting identity confirm each other
};

/// Cross-validates the two faces of triviality on one table: simplicial
/// homology vanishes in degrees 1..nmax, and the splitting identity holds
/// for the degrees the tower covers.
SplitVsVanishReport splitting_vs_vanishing(const TablePtr& s, const SigmaTower& t, int nmax,
                                           const Caps& caps = {});

}  // namespace hochlat
