#include "hochlat/algebra.hpp"

#include <bit>

#include "hochlat/detail/sparse_map.hpp"
#include "hochlat/errors.hpp"

namespace hochlat {

namespace {

void require_same_base(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.base.get() == b.base.get()) return;
  if (!a.base || !b.base || !(*a.base == *b.base))
    throw UsageError("BaseMismatch", "algebra elements live over different tables");
}

}  // namespace

Rational AlgebraElement::coeff(int s) const {
  auto it = coeffs.find(s);
  return it == coeffs.end() ? Rational(0) : it->second;
}

Rational AlgebraElement::l1_norm() const { return detail::l1_norm(coeffs); }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_base(a, b);
  return a.coeffs == b.coeffs;
}

AlgebraElement zero_element(TablePtr base) { return AlgebraElement{std::move(base), {}}; }

AlgebraElement basis_element(TablePtr base, int s) {
  if (s < 0 || s >= base->size())
    throw UsageError("IndexOutOfRange",
                     "basis index " + std::to_string(s) + " out of range for table of size " +
                         std::to_string(base->size()));
  AlgebraElement e{std::move(base), {}};
  e.coeffs.emplace(s, 1);
  return e;
}

AlgebraElement unit_element(TablePtr base) {
  if (!base->unit) throw ValidationError("NotUnital", "table has no unit element");
  return basis_element(std::move(base), *base->unit);
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_base(a, b);
  AlgebraElement out = a;
  detail::add_scaled(out.coeffs, b.coeffs, Rational(1));
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_base(a, b);
  AlgebraElement out = a;
  detail::add_scaled(out.coeffs, b.coeffs, Rational(-1));
  return out;
}

AlgebraElement operator*(const Rational& c, const AlgebraElement& a) {
  AlgebraElement out{a.base, {}};
  detail::add_scaled(out.coeffs, a.coeffs, c);
  return out;
}

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_base(a, b);
  AlgebraElement out{a.base, {}};
  for (const auto& [s, cs] : a.coeffs)
    for (const auto& [t, ct] : b.coeffs)
      detail::add_term(out.coeffs, a.base->mul(s, t), Rational(cs * ct));
  return out;
}

Rational l1_norm(const AlgebraElement& a) { return a.l1_norm(); }

AlgebraElement u_element(const TablePtr& free_table, int k, std::uint32_t j_mask) {
  if (k < 0 || free_table->size() != (1 << k))
    throw UsageError("Usage", "table is not the free unital semilattice on k generators");
  if (k > 0 && (j_mask >> k) != 0)
    throw UsageError("IndexOutOfRange", "subset mask out of range");

  auto order = subset_order(k);
  std::vector<int> index_of(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) index_of[order[i]] = static_cast<int>(i);

  AlgebraElement result = unit_element(free_table);
  for (int i = 0; i < k; ++i) {
    int singleton = index_of[std::uint32_t(1) << i];
    AlgebraElement factor = basis_element(free_table, singleton);
    if ((j_mask >> i & 1u) == 0)
      factor = unit_element(free_table) - factor;  // e_empty - e_i
    result = convolve(result, factor);
  }
  return result;
}

AlgebraElement u_element(int k, std::uint32_t j_mask, const Caps& caps) {
  return u_element(free_unital_semilattice(k, caps), k, j_mask);
}

}  // namespace hochlat
