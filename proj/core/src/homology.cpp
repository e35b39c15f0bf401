#include "hochlat/homology.hpp"

#include <algorithm>

#include "hochlat/errors.hpp"

namespace hochlat {

namespace {

std::string default_desc(const TablePtr& s) { return "|S|=" + std::to_string(s->size()); }

DegreeRecord make_record(int n, std::uint64_t dim_space, int rank_outgoing, int rank_incoming) {
  DegreeRecord rec;
  rec.n = n;
  rec.dim_space = dim_space;
  rec.rank_outgoing = rank_outgoing;
  rec.rank_incoming = rank_incoming;
  if (static_cast<std::uint64_t>(rank_outgoing) > dim_space)
    throw ValidationError("Internal", "rank exceeds space dimension");
  rec.dim_kernel = dim_space - static_cast<std::uint64_t>(rank_outgoing);
  if (static_cast<std::uint64_t>(rank_incoming) > rec.dim_kernel)
    throw ValidationError("Internal", "boundaries exceed cycles; d.d != 0?");
  rec.dim_h = rec.dim_kernel - static_cast<std::uint64_t>(rank_incoming);
  return rec;
}

}  // namespace

bool HomologyReport::all_zero() const {
  return std::all_of(degrees.begin(), degrees.end(),
                     [](const DegreeRecord& r) { return r.dim_h == 0; });
}

HomologyReport homology_dims(const TablePtr& s, int nmax, const BimodulePtr& m,
                             const std::string& coeff_label, const Caps& caps) {
  if (nmax < 1) throw UsageError("Usage", "nmax must be at least 1");
  const int size = s->size();
  const int lead = m ? m->dim : size;

  std::vector<int> rank_d(static_cast<std::size_t>(nmax) + 1);
  for (int i = 0; i <= nmax; ++i)
    rank_d[static_cast<std::size_t>(i)] = boundary_matrix(s, i, m, caps).rank();

  HomologyReport report;
  report.table_desc = default_desc(s);
  report.coefficients = coeff_label;
  report.cohomology = false;
  report.unit_linked = m ? m->unit_linked : s->unit.has_value();
  for (int n = 1; n <= nmax; ++n)
    report.degrees.push_back(make_record(n, tuple_space_dim(lead, size, n + 1),
                                         rank_d[static_cast<std::size_t>(n) - 1],
                                         rank_d[static_cast<std::size_t>(n)]));
  return report;
}

HomologyReport cohomology_dims(const TablePtr& s, int nmax, const BimodulePtr& m,
                               const std::string& coeff_label, const Caps& caps) {
  if (nmax < 1) throw UsageError("Usage", "nmax must be at least 1");
  if (!m) throw UsageError("Usage", "cohomology needs a coefficient module");
  const int size = s->size();

  std::vector<int> rank_delta(static_cast<std::size_t>(nmax) + 1);
  for (int i = 0; i <= nmax; ++i)
    rank_delta[static_cast<std::size_t>(i)] = coboundary_matrix(s, i, m, caps).rank();

  HomologyReport report;
  report.table_desc = default_desc(s);
  report.coefficients = coeff_label;
  report.cohomology = true;
  report.unit_linked = m->unit_linked;
  for (int n = 1; n <= nmax; ++n) {
    const std::uint64_t dim_space =
        static_cast<std::uint64_t>(m->dim) * pow_sat(static_cast<std::uint64_t>(size), n);
    report.degrees.push_back(make_record(n, dim_space, rank_delta[static_cast<std::size_t>(n)],
                                         rank_delta[static_cast<std::size_t>(n) - 1]));
  }
  return report;
}

DualityReport duality_check(const TablePtr& s, int nmax, const Caps& caps) {
  const HomologyReport hom = homology_dims(s, nmax, nullptr, "A", caps);
  const HomologyReport coh = cohomology_dims(s, nmax, dual_bimodule(s), "A'", caps);
  DualityReport report;
  for (int i = 0; i < nmax; ++i) {
    DualityRecord rec;
    rec.n = i + 1;
    rec.dim_homology = hom.degrees[static_cast<std::size_t>(i)].dim_h;
    rec.dim_cohomology = coh.degrees[static_cast<std::size_t>(i)].dim_h;
    if (rec.dim_homology != rec.dim_cohomology) report.ok = false;
    report.degrees.push_back(rec);
  }
  return report;
}

UnitisationReport unitisation_check(const TablePtr& s, const BimodulePtr& m, int nmax,
                                    const Caps& caps) {
  if (s->unit) throw UsageError("Usage", "table is already unital");
  if (!s->commutative) throw UsageError("Usage", "unitisation comparison needs a commutative table");
  if (!m || !(*m->base == *s)) throw UsageError("BaseMismatch", "module base does not match");
  if (!m->symmetric) throw ValidationError("NotSymmetric", "module is not symmetric");

  const UnitizeResult u = unitize(s);
  const BimodulePtr m1 = unitize_bimodule(*m, u.table);
  const HomologyReport original = cohomology_dims(s, nmax, m, "M", caps);
  const HomologyReport extended = cohomology_dims(u.table, nmax, m1, "M1", caps);

  UnitisationReport report;
  for (int i = 0; i < nmax; ++i) {
    UnitisationRecord rec;
    rec.n = i + 1;
    rec.dim_unitized = extended.degrees[static_cast<std::size_t>(i)].dim_h;
    rec.dim_original = original.degrees[static_cast<std::size_t>(i)].dim_h;
    if (rec.dim_unitized != rec.dim_original) report.ok = false;
    report.degrees.push_back(rec);
  }
  return report;
}

SplitVsVanishReport splitting_vs_vanishing(const TablePtr& s, const SigmaTower& t, int nmax,
                                           const Caps& caps) {
  SplitVsVanishReport report;
  report.homology = homology_dims(s, nmax, nullptr, "A", caps);
  report.splitting = verify_splitting(t, s, 1, std::min(nmax, t.max_degree), caps);
  report.ok = report.homology.all_zero() && report.splitting.ok;
  return report;
}

}  // namespace hochlat
