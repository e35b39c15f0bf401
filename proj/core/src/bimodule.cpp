#include "hochlat/bimodule.hpp"

#include "hochlat/errors.hpp"

namespace hochlat {

BimodulePtr validate_bimodule(TablePtr base, int dim, std::vector<RationalMatrix> left,
                              std::vector<RationalMatrix> right) {
  const int n = base->size();
  if (dim < 0) throw UsageError("Usage", "module dimension must be nonnegative");
  if (left.size() != static_cast<std::size_t>(n) || right.size() != static_cast<std::size_t>(n))
    throw UsageError("Usage", "need one action matrix per basis element on each side");
  for (const auto& m : left)
    if (m.rows() != dim || m.cols() != dim)
      throw UsageError("Usage", "left action matrix is not dim x dim");
  for (const auto& m : right)
    if (m.rows() != dim || m.cols() != dim)
      throw UsageError("Usage", "right action matrix is not dim x dim");

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int st = base->mul(s, t);
      if (!(left[static_cast<std::size_t>(st)] ==
            left[static_cast<std::size_t>(s)] * left[static_cast<std::size_t>(t)]))
        throw ValidationError("NotBimodule", "L(" + base->elements[static_cast<std::size_t>(s)] +
                                                 "*" + base->elements[static_cast<std::size_t>(t)] +
                                                 ") != L(s)L(t)");
      if (!(right[static_cast<std::size_t>(st)] ==
            right[static_cast<std::size_t>(t)] * right[static_cast<std::size_t>(s)]))
        throw ValidationError("NotBimodule", "R(" + base->elements[static_cast<std::size_t>(s)] +
                                                 "*" + base->elements[static_cast<std::size_t>(t)] +
                                                 ") != R(t)R(s)");
      if (!(left[static_cast<std::size_t>(s)] * right[static_cast<std::size_t>(t)] ==
            right[static_cast<std::size_t>(t)] * left[static_cast<std::size_t>(s)]))
        throw ValidationError("NotBimodule",
                              "left and right actions do not commute at (" +
                                  base->elements[static_cast<std::size_t>(s)] + "," +
                                  base->elements[static_cast<std::size_t>(t)] + ")");
    }

  auto m = std::make_shared<Bimodule>();
  m->base = std::move(base);
  m->dim = dim;
  m->left = std::move(left);
  m->right = std::move(right);
  m->symmetric = true;
  for (int s = 0; s < n && m->symmetric; ++s)
    if (!(m->left[static_cast<std::size_t>(s)] == m->right[static_cast<std::size_t>(s)]))
      m->symmetric = false;
  m->unit_linked = false;
  if (m->base->unit) {
    const auto& lu = m->left[static_cast<std::size_t>(*m->base->unit)];
    const auto& ru = m->right[static_cast<std::size_t>(*m->base->unit)];
    m->unit_linked = lu == RationalMatrix::identity(dim) && ru == RationalMatrix::identity(dim);
  }
  return m;
}

BimodulePtr regular_bimodule(const TablePtr& s) {
  const int n = s->size();
  std::vector<RationalMatrix> left, right;
  left.reserve(static_cast<std::size_t>(n));
  right.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    RationalMatrix l(n, n), r(n, n);
    for (int t = 0; t < n; ++t) {
      l.add(s->mul(a, t), t, 1);
      r.add(s->mul(t, a), t, 1);
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  return validate_bimodule(s, n, std::move(left), std::move(right));
}

BimodulePtr dual_bimodule(const TablePtr& s) {
  auto regular = regular_bimodule(s);
  const int n = s->size();
  std::vector<RationalMatrix> left, right;
  left.reserve(static_cast<std::size_t>(n));
  right.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    left.push_back(regular->right[static_cast<std::size_t>(a)].transpose());
    right.push_back(regular->left[static_cast<std::size_t>(a)].transpose());
  }
  return validate_bimodule(s, n, std::move(left), std::move(right));
}

BimodulePtr zero_bimodule(const TablePtr& s) {
  const std::size_t n = static_cast<std::size_t>(s->size());
  return validate_bimodule(s, 0, std::vector<RationalMatrix>(n, RationalMatrix(0, 0)),
                           std::vector<RationalMatrix>(n, RationalMatrix(0, 0)));
}

BimodulePtr unitize_bimodule(const Bimodule& m, const TablePtr& unitized) {
  const int n = m.base->size();
  if (unitized->size() != n + 1 || !unitized->unit || *unitized->unit != n)
    throw UsageError("Usage", "expected the unitization of the module base (unit appended last)");
  std::vector<RationalMatrix> left = m.left;
  std::vector<RationalMatrix> right = m.right;
  left.push_back(RationalMatrix::identity(m.dim));
  right.push_back(RationalMatrix::identity(m.dim));
  return validate_bimodule(unitized, m.dim, std::move(left), std::move(right));
}

}  // namespace hochlat
