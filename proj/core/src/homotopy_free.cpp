#include "hochlat/homotopy_free.hpp"

#include "hochlat/detail/sparse_map.hpp"
#include "hochlat/errors.hpp"

namespace hochlat {

namespace {

Rational pow5(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 5, static_cast<unsigned long>(k));
  return Rational(p);
}

Rational pow2(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Rational(p);
}

}  // namespace

HomotopyFree::HomotopyFree(int k, const Caps& caps)
    : k_(k), table_(free_unital_semilattice(k, caps)) {
  const std::uint32_t count = std::uint32_t(1) << k;
  u_.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask)
    u_.push_back(u_element(table_, k_, mask));

  // The defining identities of the diagonal family; failure here means the
  // construction itself is broken.
  auto order = subset_order(k_);
  std::vector<int> index_of(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) index_of[order[i]] = static_cast<int>(i);

  AlgebraElement sum = zero_element(table_);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    const AlgebraElement& u = u_[mask];
    if (!(convolve(u, u) == u))
      throw ValidationError("Internal", "diagonal element is not idempotent");
    if (u.l1_norm() > pow2(k_ - std::popcount(mask)))
      throw ValidationError("Internal", "diagonal element norm bound fails");
    for (int i = 0; i < k_; ++i) {
      const AlgebraElement ei = basis_element(table_, index_of[std::uint32_t(1) << i]);
      const AlgebraElement prod = convolve(ei, u);
      const bool in_mask = (mask >> i & 1u) != 0;
      if (in_mask ? !(prod == u) : !prod.is_zero())
        throw ValidationError("Internal", "generator action on diagonal element fails");
    }
    sum = sum + convolve(u, u);
  }
  if (!(sum == unit_element(table_)))
    throw ValidationError("Internal", "diagonal squares do not sum to the unit");
}

const AlgebraElement& HomotopyFree::u(std::uint32_t j_mask) const {
  if (j_mask >= u_.size()) throw UsageError("IndexOutOfRange", "subset mask out of range");
  return u_[j_mask];
}

Chain HomotopyFree::apply_s(int n, const Chain& c) const {
  if (c.module) throw UsageError("Usage", "the homotopy acts on simplicial chains");
  if (!(*c.base == *table_))
    throw UsageError("BaseMismatch", "chain does not live over the free table");
  if (c.degree != n) throw UsageError("Usage", "chain degree does not match n");
  if (n == 0) return zero_chain(table_, 1);

  Chain out = zero_chain(table_, n + 1);
  // a_0 u_J per (basis, J), filled on demand.
  std::vector<std::vector<AlgebraElement>> left_cache(
      static_cast<std::size_t>(table_->size()), std::vector<AlgebraElement>(u_.size()));
  std::vector<std::vector<bool>> filled(static_cast<std::size_t>(table_->size()),
                                        std::vector<bool>(u_.size(), false));

  for (const auto& [key, v] : c.coeffs) {
    for (std::uint32_t mask = 0; mask < u_.size(); ++mask) {
      auto& a0u = left_cache[static_cast<std::size_t>(key[0])][mask];
      if (!filled[static_cast<std::size_t>(key[0])][mask]) {
        a0u = convolve(basis_element(table_, key[0]), u_[mask]);
        filled[static_cast<std::size_t>(key[0])][mask] = true;
      }
      for (const auto& [p, cp] : a0u.coeffs)
        for (const auto& [q, cq] : u_[mask].coeffs) {
          Tuple t;
          t.reserve(key.size() + 1);
          t.push_back(p);
          t.push_back(q);
          t.insert(t.end(), key.begin() + 1, key.end());
          detail::add_term(out.coeffs, t, Rational(v * cp * cq));
        }
    }
  }
  return out;
}

Rational HomotopyFree::s_operator_norm(int n, const Caps& caps) const {
  return operator_l1_norm(
      table_, n, [&](const Tuple& key) { return apply_s(n, primitive_tensor(table_, key)); },
      caps);
}

Rational HomotopyFree::u_norm_square_sum() const {
  Rational total = 0;
  for (const auto& u : u_) {
    const Rational norm = u.l1_norm();
    total += norm * norm;
  }
  return total;
}

Rational operator_l1_norm(const TablePtr& s, int degree,
                          const std::function<Chain(const Tuple&)>& map, const Caps& caps) {
  const int size = s->size();
  require_dim(tuple_space_dim(size, size, degree + 1), caps, "chain space");
  Rational best = 0;
  for_each_tuple(size, size, degree + 1, [&](const Tuple& key) {
    Rational norm = map(key).l1_norm();
    if (norm > best) best = norm;
  });
  return best;
}

std::vector<HomotopyCheckRecord> homotopy_check(int k, int nmax, const Caps& caps) {
  HomotopyFree h(k, caps);
  const TablePtr& table = h.table();
  const int size = table->size();

  std::vector<HomotopyCheckRecord> records;
  for (int n = 1; n <= nmax; ++n) {
    require_dim(tuple_space_dim(size, size, n + 2), caps, "chain space");
    HomotopyCheckRecord rec;
    rec.k = k;
    rec.n = n;
    rec.identity_verified = true;
    for_each_tuple(size, size, n + 1, [&](const Tuple& key) {
      if (!rec.identity_verified) return;
      const Chain x = primitive_tensor(table, key);
      const Chain lhs = boundary(h.apply_s(n, x)) + h.apply_s(n - 1, boundary(x));
      if (!(lhs == x)) rec.identity_verified = false;
    });
    rec.exact_norm = h.s_operator_norm(n, caps);
    rec.bound = pow5(k);
    if (rec.exact_norm > rec.bound)
      throw ValidationError("Internal", "homotopy norm exceeds its bound");
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace hochlat
