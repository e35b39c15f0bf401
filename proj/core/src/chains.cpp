#include "hochlat/chains.hpp"

#include "hochlat/detail/sparse_map.hpp"
#include "hochlat/errors.hpp"

namespace hochlat {

namespace {

bool bimodule_equal(const BimodulePtr& a, const BimodulePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return a->dim == b->dim && *a->base == *b->base && a->left == b->left && a->right == b->right;
}

void require_same_space(const Chain& a, const Chain& b) {
  if (a.degree != b.degree || !(*a.base == *b.base) || !bimodule_equal(a.module, b.module))
    throw UsageError("BaseMismatch", "chains live in different spaces");
}

int lead_radix_of(const Chain& c) { return c.module ? c.module->dim : c.base->size(); }

void check_key(const Chain& c, const Tuple& key) {
  if (key.size() != static_cast<std::size_t>(c.degree) + 1)
    throw UsageError("Usage", "tuple arity " + std::to_string(key.size()) +
                                  " does not match degree " + std::to_string(c.degree));
  const int lead = lead_radix_of(c);
  if (key[0] < 0 || key[0] >= lead)
    throw UsageError("IndexOutOfRange", "slot 0 index out of range");
  for (std::size_t i = 1; i < key.size(); ++i)
    if (key[i] < 0 || key[i] >= c.base->size())
      throw UsageError("IndexOutOfRange", "tuple index out of range");
}

// out[m'] += scale * act[:,m] applied through fn(m', value).
void scatter_action_column(const RationalMatrix& act, int m,
                           const std::function<void(int, const Rational&)>& fn) {
  for (int row = 0; row < act.rows(); ++row) {
    auto it = act.row(row).find(m);
    if (it != act.row(row).end()) fn(row, it->second);
  }
}

}  // namespace

Rational Chain::l1_norm() const { return detail::l1_norm(coeffs); }

Rational Chain::coeff(const Tuple& key) const {
  auto it = coeffs.find(key);
  return it == coeffs.end() ? Rational(0) : it->second;
}

bool operator==(const Chain& a, const Chain& b) {
  require_same_space(a, b);
  return a.coeffs == b.coeffs;
}

Chain zero_chain(TablePtr base, int degree, BimodulePtr module) {
  if (degree < 0) throw UsageError("Usage", "chain degree must be nonnegative");
  return Chain{std::move(base), degree, std::move(module), {}};
}

Chain primitive_tensor(TablePtr base, const Tuple& key, BimodulePtr module) {
  if (key.empty()) throw UsageError("Usage", "primitive tensor needs at least one slot");
  Chain c{std::move(base), static_cast<int>(key.size()) - 1, std::move(module), {}};
  check_key(c, key);
  c.coeffs.emplace(key, 1);
  return c;
}

Chain operator+(const Chain& a, const Chain& b) {
  require_same_space(a, b);
  Chain out = a;
  detail::add_scaled(out.coeffs, b.coeffs, Rational(1));
  return out;
}

Chain operator-(const Chain& a, const Chain& b) {
  require_same_space(a, b);
  Chain out = a;
  detail::add_scaled(out.coeffs, b.coeffs, Rational(-1));
  return out;
}

Chain operator*(const Rational& c, const Chain& a) {
  Chain out{a.base, a.degree, a.module, {}};
  detail::add_scaled(out.coeffs, a.coeffs, c);
  return out;
}

Chain boundary(const Chain& c) {
  if (c.degree < 1) throw UsageError("DegreeTooLow", "boundary needs degree >= 1");
  const int n = c.degree - 1;  // this is d_n : C_{n+1} -> C_n
  const auto& table = *c.base;
  Chain out{c.base, n, c.module, {}};

  for (const auto& [key, v] : c.coeffs) {
    // x a_1 (right action on the slot-0 entry).
    {
      Tuple t(key.begin() + 1, key.end());
      if (c.module) {
        scatter_action_column(c.module->right[static_cast<std::size_t>(key[1])], key[0],
                              [&](int m, const Rational& q) {
                                Tuple u = t;
                                u[0] = m;
                                detail::add_term(out.coeffs, u, Rational(v * q));
                              });
      } else {
        t[0] = table.mul(key[0], key[1]);
        detail::add_term(out.coeffs, t, v);
      }
    }
    // Adjacent products, signs alternating.
    for (int j = 1; j <= n; ++j) {
      Tuple t;
      t.reserve(key.size() - 1);
      t.insert(t.end(), key.begin(), key.begin() + j);
      t.push_back(table.mul(key[static_cast<std::size_t>(j)], key[static_cast<std::size_t>(j) + 1]));
      t.insert(t.end(), key.begin() + j + 2, key.end());
      detail::add_term(out.coeffs, t, Rational(j % 2 == 0 ? v : -v));
    }
    // a_{n+1} x (left action), sign (-1)^(n+1).
    {
      const Rational sv = (n + 1) % 2 == 0 ? v : -v;
      Tuple t(key.begin(), key.end() - 1);
      if (c.module) {
        scatter_action_column(c.module->left[static_cast<std::size_t>(key.back())], key[0],
                              [&](int m, const Rational& q) {
                                Tuple u = t;
                                u[0] = m;
                                detail::add_term(out.coeffs, u, Rational(sv * q));
                              });
      } else {
        t[0] = table.mul(key.back(), key[0]);
        detail::add_term(out.coeffs, t, sv);
      }
    }
  }
  return out;
}

Chain induced_map(const Morphism& theta, const Chain& c) {
  if (c.module) throw UsageError("Usage", "induced maps act on simplicial chains");
  if (!(*c.base == *theta.source))
    throw UsageError("BaseMismatch", "chain does not live over the morphism source");
  Chain out{theta.target, c.degree, nullptr, {}};
  for (const auto& [key, v] : c.coeffs) {
    Tuple t(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) t[i] = theta.apply(key[i]);
    detail::add_term(out.coeffs, t, v);
  }
  return out;
}

std::uint64_t tuple_space_dim(int lead_radix, int radix, int arity) {
  if (arity == 0) return 1;
  return static_cast<std::uint64_t>(lead_radix) * pow_sat(static_cast<std::uint64_t>(radix), arity - 1);
}

std::uint64_t tuple_to_index(const Tuple& t, int radix) {
  std::uint64_t index = 0;
  for (int v : t) index = index * static_cast<std::uint64_t>(radix) + static_cast<std::uint64_t>(v);
  return index;
}

Tuple index_to_tuple(std::uint64_t index, int lead_radix, int radix, int arity) {
  Tuple t(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 1; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(radix));
    index /= static_cast<std::uint64_t>(radix);
  }
  if (arity > 0) t[0] = static_cast<int>(index);
  if (arity > 0 && t[0] >= lead_radix)
    throw UsageError("IndexOutOfRange", "tuple index out of range");
  return t;
}

void for_each_tuple(int lead_radix, int radix, int arity,
                    const std::function<void(const Tuple&)>& fn) {
  if (arity == 0) {
    fn(Tuple{});
    return;
  }
  if (lead_radix == 0 || radix == 0) return;
  Tuple t(static_cast<std::size_t>(arity), 0);
  while (true) {
    fn(t);
    int i = arity - 1;
    while (i >= 0) {
      const int limit = i == 0 ? lead_radix : radix;
      if (++t[static_cast<std::size_t>(i)] < limit) break;
      t[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

RationalMatrix boundary_matrix(const TablePtr& s, int n, const BimodulePtr& module,
                               const Caps& caps) {
  if (n < 0) throw UsageError("Usage", "boundary degree must be nonnegative");
  const int size = s->size();
  const int lead = module ? module->dim : size;
  const std::uint64_t rows = tuple_space_dim(lead, size, n + 1);
  const std::uint64_t cols = tuple_space_dim(lead, size, n + 2);
  require_dim(cols, caps, "chain space");
  RationalMatrix m(static_cast<int>(rows), static_cast<int>(cols));

  for_each_tuple(lead, size, n + 2, [&](const Tuple& key) {
    const std::uint64_t col = tuple_to_index(key, size);
    Chain image = boundary(primitive_tensor(s, key, module));
    for (const auto& [t, v] : image.coeffs)
      m.add(static_cast<int>(tuple_to_index(t, size)), static_cast<int>(col), v);
  });
  return m;
}

bool Cochain::is_zero() const {
  for (const auto& v : values)
    if (sgn(v) != 0) return false;
  return true;
}

bool operator==(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || !(*a.base == *b.base) || !bimodule_equal(a.module, b.module))
    throw UsageError("BaseMismatch", "cochains live in different spaces");
  return a.values == b.values;
}

Cochain zero_cochain(TablePtr base, int degree, BimodulePtr module, const Caps& caps) {
  if (degree < 0) throw UsageError("Usage", "cochain degree must be nonnegative");
  if (!module) throw UsageError("Usage", "cochains need a coefficient module");
  const std::uint64_t tuples = tuple_space_dim(base->size(), base->size(), degree);
  const std::uint64_t total = tuples * static_cast<std::uint64_t>(module->dim);
  require_dim(total == 0 ? tuples : total, caps, "cochain space");
  Cochain f{std::move(base), degree, std::move(module), {}};
  f.values.assign(static_cast<std::size_t>(total), Rational(0));
  return f;
}

Cochain basis_cochain(TablePtr base, int degree, BimodulePtr module, const Tuple& key, int m,
                      const Caps& caps) {
  Cochain f = zero_cochain(std::move(base), degree, std::move(module), caps);
  if (key.size() != static_cast<std::size_t>(degree))
    throw UsageError("Usage", "tuple arity does not match cochain degree");
  for (int v : key)
    if (v < 0 || v >= f.base->size()) throw UsageError("IndexOutOfRange", "tuple index out of range");
  if (m < 0 || m >= f.module->dim)
    throw UsageError("IndexOutOfRange", "module coordinate out of range");
  const std::uint64_t tuples = tuple_space_dim(f.base->size(), f.base->size(), degree);
  f.values[static_cast<std::size_t>(m) * tuples + tuple_to_index(key, f.base->size())] = 1;
  return f;
}

Cochain coboundary(const Cochain& f, const Caps& caps) {
  const int n = f.degree;
  const int size = f.base->size();
  const int dim = f.module->dim;
  const std::uint64_t in_tuples = tuple_space_dim(size, size, n);
  Cochain out = zero_cochain(f.base, n + 1, f.module, caps);
  const std::uint64_t out_tuples = tuple_space_dim(size, size, n + 1);

  auto value_at = [&](std::uint64_t tuple_idx, int m) -> const Rational& {
    return f.values[static_cast<std::size_t>(m) * in_tuples + tuple_idx];
  };

  for_each_tuple(size, size, n + 1, [&](const Tuple& a) {
    const std::uint64_t out_idx = tuple_to_index(a, size);
    // a_1 . F(a_2,...,a_{n+1})
    {
      const Tuple tail(a.begin() + 1, a.end());
      const std::uint64_t t_idx = tuple_to_index(tail, size);
      const auto& act = f.module->left[static_cast<std::size_t>(a[0])];
      for (int row = 0; row < dim; ++row)
        for (const auto& [m, q] : act.row(row)) {
          const Rational& x = value_at(t_idx, m);
          if (sgn(x) != 0)
            out.values[static_cast<std::size_t>(row) * out_tuples + out_idx] += q * x;
        }
    }
    // alternating merges
    for (int j = 1; j <= n; ++j) {
      Tuple t;
      t.reserve(a.size() - 1);
      t.insert(t.end(), a.begin(), a.begin() + (j - 1));
      t.push_back(f.base->mul(a[static_cast<std::size_t>(j) - 1], a[static_cast<std::size_t>(j)]));
      t.insert(t.end(), a.begin() + j + 1, a.end());
      const std::uint64_t t_idx = tuple_to_index(t, size);
      for (int m = 0; m < dim; ++m) {
        const Rational& x = value_at(t_idx, m);
        if (sgn(x) == 0) continue;
        auto& slot = out.values[static_cast<std::size_t>(m) * out_tuples + out_idx];
        if (j % 2 == 0)
          slot += x;
        else
          slot -= x;
      }
    }
    // (-1)^{n+1} F(a_1,...,a_n) . a_{n+1}
    {
      const Tuple head(a.begin(), a.end() - 1);
      const std::uint64_t t_idx = tuple_to_index(head, size);
      const auto& act = f.module->right[static_cast<std::size_t>(a.back())];
      const bool negate = (n + 1) % 2 != 0;
      for (int row = 0; row < dim; ++row)
        for (const auto& [m, q] : act.row(row)) {
          const Rational& x = value_at(t_idx, m);
          if (sgn(x) == 0) continue;
          auto& slot = out.values[static_cast<std::size_t>(row) * out_tuples + out_idx];
          if (negate)
            slot -= q * x;
          else
            slot += q * x;
        }
    }
  });
  return out;
}

RationalMatrix coboundary_matrix(const TablePtr& s, int n, const BimodulePtr& module,
                                 const Caps& caps) {
  if (n < 0) throw UsageError("Usage", "coboundary degree must be nonnegative");
  if (!module) throw UsageError("Usage", "cochains need a coefficient module");
  const int size = s->size();
  const int dim = module->dim;
  const std::uint64_t in_tuples = tuple_space_dim(size, size, n);
  const std::uint64_t out_tuples = tuple_space_dim(size, size, n + 1);
  require_dim(std::max<std::uint64_t>(out_tuples * static_cast<std::uint64_t>(dim), out_tuples),
              caps, "cochain space");
  RationalMatrix mat(static_cast<int>(out_tuples * static_cast<std::uint64_t>(dim)),
                     static_cast<int>(in_tuples * static_cast<std::uint64_t>(dim)));

  auto row_of = [&](int m, std::uint64_t tuple_idx) {
    return static_cast<int>(static_cast<std::uint64_t>(m) * out_tuples + tuple_idx);
  };
  auto col_of = [&](int m, std::uint64_t tuple_idx) {
    return static_cast<int>(static_cast<std::uint64_t>(m) * in_tuples + tuple_idx);
  };

  for_each_tuple(size, size, n + 1, [&](const Tuple& a) {
    const std::uint64_t out_idx = tuple_to_index(a, size);
    {
      const Tuple tail(a.begin() + 1, a.end());
      const std::uint64_t t_idx = tuple_to_index(tail, size);
      const auto& act = module->left[static_cast<std::size_t>(a[0])];
      for (int row = 0; row < dim; ++row)
        for (const auto& [m, q] : act.row(row)) mat.add(row_of(row, out_idx), col_of(m, t_idx), q);
    }
    for (int j = 1; j <= n; ++j) {
      Tuple t;
      t.reserve(a.size() - 1);
      t.insert(t.end(), a.begin(), a.begin() + (j - 1));
      t.push_back(s->mul(a[static_cast<std::size_t>(j) - 1], a[static_cast<std::size_t>(j)]));
      t.insert(t.end(), a.begin() + j + 1, a.end());
      const std::uint64_t t_idx = tuple_to_index(t, size);
      const Rational sign = j % 2 == 0 ? 1 : -1;
      for (int m = 0; m < dim; ++m) mat.add(row_of(m, out_idx), col_of(m, t_idx), sign);
    }
    {
      const Tuple head(a.begin(), a.end() - 1);
      const std::uint64_t t_idx = tuple_to_index(head, size);
      const auto& act = module->right[static_cast<std::size_t>(a.back())];
      const Rational sign = (n + 1) % 2 == 0 ? 1 : -1;
      for (int row = 0; row < dim; ++row)
        for (const auto& [m, q] : act.row(row))
          mat.add(row_of(row, out_idx), col_of(m, t_idx), Rational(sign * q));
    }
  });
  return mat;
}

ModuleMapCheck module_map_check(const TablePtr& s, int n, int b, const Caps& caps) {
  if (b < 0 || b >= s->size()) throw UsageError("IndexOutOfRange", "acting index out of range");
  if (n < 0) throw UsageError("Usage", "degree must be nonnegative");
  const int size = s->size();
  require_dim(tuple_space_dim(size, size, n + 2), caps, "chain space");

  ModuleMapCheck result;
  result.acting = b;
  for_each_tuple(size, size, n + 2, [&](const Tuple& key) {
    if (!result.ok) return;
    Tuple shifted = key;
    shifted[0] = s->mul(b, key[0]);
    const Chain lhs = boundary(primitive_tensor(s, shifted));

    Chain rhs_raw = boundary(primitive_tensor(s, key));
    Chain rhs{s, rhs_raw.degree, nullptr, {}};
    for (const auto& [t, v] : rhs_raw.coeffs) {
      Tuple u = t;
      u[0] = s->mul(b, t[0]);
      detail::add_term(rhs.coeffs, u, v);
    }
    if (!(lhs.coeffs == rhs.coeffs)) {
      result.ok = false;
      result.witness = key;
    }
  });
  return result;
}

}  // namespace hochlat
