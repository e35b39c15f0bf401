#include "hochlat/natural_splitting.hpp"

#include "hochlat/detail/sparse_map.hpp"
#include "hochlat/errors.hpp"

namespace hochlat {

namespace {

void require_unital_semilattice(const TablePtr& s) {
  if (!s->is_unital_semilattice())
    throw ValidationError("NotUnitalSemilattice", "table is not a unital semilattice");
}

}  // namespace

const Chain& SigmaTower::w_chain(int j) const {
  if (j < 1 || j > max_degree)
    throw UsageError("DegreeOutOfRange", "tower has no chain for degree " + std::to_string(j));
  return w[static_cast<std::size_t>(j)];
}

Tuple generator_tuple(const TablePtr& free_table, int j) {
  const int k = j + 1;
  if (free_table->size() != (1 << k))
    throw UsageError("Usage", "table is not the free unital semilattice on j+1 generators");
  auto order = subset_order(k);
  std::vector<int> index_of(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) index_of[order[i]] = static_cast<int>(i);
  Tuple f(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) f[static_cast<std::size_t>(i)] = index_of[std::uint32_t(1) << i];
  return f;
}

SigmaTower build_tower(int j_max, const Caps& caps) {
  if (j_max < 1) throw UsageError("Usage", "tower needs at least degree 1");
  SigmaTower t;
  t.max_degree = j_max;
  t.w.resize(static_cast<std::size_t>(j_max) + 1);

  for (int j = 1; j <= j_max; ++j) {
    const int k = j + 1;
    require_dim(pow_sat(std::uint64_t(1) << k, j + 2), caps, "tower chain space");
    HomotopyFree h(k, caps);
    const TablePtr& free_table = h.table();
    const Chain f = primitive_tensor(free_table, generator_tuple(free_table, j));

    Chain rhs = f;
    if (j >= 2) {
      // sigma_{j-1} over the free table itself, via the tower built so far.
      SigmaEvaluator eval(t, free_table);
      rhs = f - eval.apply(j - 1, boundary(f));
    }
    Chain w = h.apply_s(j, rhs);
    if (!(boundary(w) == rhs))
      throw ValidationError("FormalIdentityFailed",
                            "defining identity fails at degree " + std::to_string(j));
    t.w[static_cast<std::size_t>(j)] = std::move(w);
  }
  return t;
}

SigmaEvaluator::SigmaEvaluator(const SigmaTower& t, TablePtr s)
    : tower_(t), table_(std::move(s)), cache_(static_cast<std::size_t>(t.max_degree) + 1) {
  require_unital_semilattice(table_);
}

const Chain& SigmaEvaluator::primitive(int j, const Tuple& x) {
  if (j < 1 || j > tower_.max_degree)
    throw UsageError("DegreeOutOfRange", "sigma degree " + std::to_string(j) + " out of range");
  auto& cache = cache_[static_cast<std::size_t>(j)];
  auto it = cache.find(x);
  if (it != cache.end()) return it->second;
  const Morphism pi = substitution_morphism(table_, x);
  Chain image = induced_map(pi, tower_.w_chain(j));
  return cache.emplace(x, std::move(image)).first->second;
}

Chain SigmaEvaluator::apply(int j, const Chain& c) {
  if (c.module) throw UsageError("Usage", "sigma acts on simplicial chains");
  if (!(*c.base == *table_)) throw UsageError("BaseMismatch", "chain over a different table");
  if (c.degree != j) throw UsageError("Usage", "chain degree does not match j");
  if (j == 0) return zero_chain(table_, 1);
  Chain out = zero_chain(table_, j + 1);
  for (const auto& [key, v] : c.coeffs)
    detail::add_scaled(out.coeffs, primitive(j, key).coeffs, v);
  return out;
}

Chain apply_sigma(const SigmaTower& t, int j, const TablePtr& s, const Chain& c) {
  require_unital_semilattice(s);
  if (j < 0 || j > t.max_degree)
    throw UsageError("DegreeOutOfRange", "sigma degree " + std::to_string(j) + " out of range");
  SigmaEvaluator eval(t, s);
  return eval.apply(j, c);
}

SplittingReport verify_splitting(const SigmaTower& t, const TablePtr& s, int j_min, int j_max,
                                 const Caps& caps) {
  require_unital_semilattice(s);
  if (j_min < 1 || j_max > t.max_degree || j_min > j_max)
    throw UsageError("DegreeOutOfRange", "splitting degrees out of range");

  SplittingReport report;
  SigmaEvaluator eval(t, s);
  const int size = s->size();
  for (int j = j_min; j <= j_max; ++j) {
    require_dim(tuple_space_dim(size, size, j + 1), caps, "chain space");
    SplittingDegreeResult r;
    r.j = j;
    r.w_norm = t.w_chain(j).l1_norm();
    r.sigma_norm = 0;
    for_each_tuple(size, size, j + 1, [&](const Tuple& x) {
      const Chain prim = primitive_tensor(s, x);
      const Chain& sigma_x = eval.primitive(j, x);
      const Rational norm = sigma_x.l1_norm();
      if (norm > r.sigma_norm) r.sigma_norm = norm;
      const Chain lhs = boundary(sigma_x) + eval.apply(j - 1, boundary(prim));
      if (!(lhs == prim)) r.failures.push_back(x);
      ++r.checked;
    });
    if (!r.ok() || r.sigma_norm > r.w_norm) report.ok = false;
    report.degrees.push_back(std::move(r));
  }
  return report;
}

NaturalityResult verify_naturality(const SigmaTower& t, const Morphism& theta, int j,
                                   const Caps& caps) {
  require_unital_semilattice(theta.source);
  require_unital_semilattice(theta.target);
  if (j < 1 || j > t.max_degree)
    throw UsageError("DegreeOutOfRange", "naturality degree out of range");

  NaturalityResult result;
  result.j = j;
  SigmaEvaluator source_eval(t, theta.source);
  SigmaEvaluator target_eval(t, theta.target);
  const int size = theta.source->size();
  require_dim(tuple_space_dim(size, size, j + 1), caps, "chain space");

  for_each_tuple(size, size, j + 1, [&](const Tuple& a) {
    const Chain lhs = induced_map(theta, source_eval.primitive(j, a));
    Tuple b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = theta.apply(a[i]);
    const Chain& rhs = target_eval.primitive(j, b);
    if (!(lhs == rhs)) result.failures.push_back(a);
    ++result.checked;
  });
  return result;
}

}  // namespace hochlat
