#include "hochlat/semilattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "hochlat/errors.hpp"

namespace hochlat {

namespace {

// Checks every triple; returns the first failing one.
bool find_nonassociative(const std::vector<int>& product, int n, int* wx, int* wy, int* wz) {
  auto mul = [&](int a, int b) { return product[static_cast<std::size_t>(a) * n + b]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          *wx = x;
          *wy = y;
          *wz = z;
          return true;
        }
  return false;
}

bool acts_as_unit(const std::vector<int>& product, int n, int e) {
  auto mul = [&](int a, int b) { return product[static_cast<std::size_t>(a) * n + b]; };
  for (int x = 0; x < n; ++x)
    if (mul(e, x) != x || mul(x, e) != x) return false;
  return true;
}

std::string enum_label(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i);
}

// Order on subset bitmasks: by size, then lexicographically on the sorted
// element lists.
bool subset_less(std::uint32_t a, std::uint32_t b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  while (a != 0 && b != 0) {
    int ea = std::countr_zero(a);
    int eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace

TablePtr validate_table(std::vector<std::string> elements, std::vector<int> product,
                        std::optional<int> unit, const Caps& caps) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw UsageError("Usage", "a table needs at least one element");
  require_table_size(n, caps);
  if (product.size() != static_cast<std::size_t>(n) * n)
    throw UsageError("Usage", "product table has " + std::to_string(product.size()) +
                                  " entries, expected " + std::to_string(n * n));
  for (int v : product)
    if (v < 0 || v >= n)
      throw UsageError("IndexOutOfRange", "product entry " + std::to_string(v) + " out of range");
  {
    std::set<std::string> seen;
    for (const auto& label : elements) {
      if (label.empty()) throw UsageError("Usage", "empty element label");
      if (!seen.insert(label).second)
        throw ValidationError("Usage", "duplicate element label '" + label + "'");
    }
  }

  int wx, wy, wz;
  if (find_nonassociative(product, n, &wx, &wy, &wz))
    throw ValidationError("NonAssociative",
                          "associativity fails at (" + elements[wx] + "," + elements[wy] + "," +
                              elements[wz] + ")");

  if (unit) {
    if (*unit < 0 || *unit >= n)
      throw UsageError("IndexOutOfRange", "unit index " + std::to_string(*unit) + " out of range");
    if (!acts_as_unit(product, n, *unit))
      throw ValidationError("BadUnit",
                            "claimed unit '" + elements[*unit] + "' is not an identity");
  } else {
    for (int e = 0; e < n; ++e)
      if (acts_as_unit(product, n, e)) {
        unit = e;
        break;
      }
  }

  auto table = std::make_shared<SemigroupTable>();
  table->elements = std::move(elements);
  table->product = std::move(product);
  table->unit = unit;
  table->commutative = true;
  table->idempotent = true;
  for (int x = 0; x < n && (table->commutative || table->idempotent); ++x) {
    if (table->mul(x, x) != x) table->idempotent = false;
    for (int y = x + 1; y < n; ++y)
      if (table->mul(x, y) != table->mul(y, x)) {
        table->commutative = false;
        break;
      }
  }
  return table;
}

std::vector<std::uint32_t> subset_order(int k) {
  if (k < 0 || k >= 31) throw UsageError("Usage", "generator count out of range");
  std::vector<std::uint32_t> masks(std::size_t(1) << k);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), subset_less);
  return masks;
}

int free_subset_index(int k, std::uint32_t mask) {
  auto order = subset_order(k);
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == mask) return static_cast<int>(i);
  throw UsageError("IndexOutOfRange", "subset mask out of range");
}

std::string subset_label(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  while (mask != 0) {
    if (!first) out += ",";
    out += std::to_string(std::countr_zero(mask));
    mask &= mask - 1;
    first = false;
  }
  return out + "}";
}

TablePtr free_unital_semilattice(int k, const Caps& caps) {
  if (k < 0) throw UsageError("Usage", "generator count must be nonnegative");
  if (k >= 31 || (std::uint64_t(1) << k) > static_cast<std::uint64_t>(caps.max_table_size))
    throw ResourceLimitError("free unital semilattice on " + std::to_string(k) +
                             " generators exceeds the table size cap");
  auto order = subset_order(k);
  const int n = static_cast<int>(order.size());
  std::vector<int> index_of(order.size());
  for (int i = 0; i < n; ++i) index_of[order[static_cast<std::size_t>(i)]] = i;

  std::vector<std::string> labels(order.size());
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = subset_label(order[static_cast<std::size_t>(i)]);

  std::vector<int> product(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      product[static_cast<std::size_t>(i) * n + j] =
          index_of[order[static_cast<std::size_t>(i)] | order[static_cast<std::size_t>(j)]];

  return validate_table(std::move(labels), std::move(product), index_of[0], caps);
}

TablePtr chain_semilattice(int n, const Caps& caps) {
  if (n < 1) throw UsageError("Usage", "chain length must be positive");
  require_table_size(n, caps);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i);
  std::vector<int> product(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) product[static_cast<std::size_t>(i) * n + j] = std::max(i, j);
  return validate_table(std::move(labels), std::move(product), 0, caps);
}

UnitizeResult unitize(const TablePtr& s) {
  if (s->unit) return {s, false};
  const int n = s->size();

  std::string unit_label = "1";
  while (std::find(s->elements.begin(), s->elements.end(), unit_label) != s->elements.end())
    unit_label += "'";

  std::vector<std::string> labels = s->elements;
  labels.push_back(unit_label);
  const int m = n + 1;
  std::vector<int> product(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int v;
      if (i == n)
        v = j;
      else if (j == n)
        v = i;
      else
        v = s->mul(i, j);
      product[static_cast<std::size_t>(i) * m + j] = v;
    }
  Caps caps;
  caps.max_table_size = m;  // unitizing a table at the cap is still fine
  return {validate_table(std::move(labels), std::move(product), n, caps), true};
}

Morphism validate_morphism(TablePtr source, TablePtr target, std::vector<int> map) {
  const int n = source->size();
  if (map.size() != static_cast<std::size_t>(n))
    throw UsageError("Usage", "morphism map has " + std::to_string(map.size()) +
                                  " entries, expected " + std::to_string(n));
  for (int v : map)
    if (v < 0 || v >= target->size())
      throw UsageError("IndexOutOfRange", "morphism image " + std::to_string(v) + " out of range");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lhs = map[static_cast<std::size_t>(source->mul(x, y))];
      int rhs = target->mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]);
      if (lhs != rhs)
        throw ValidationError("NotHomomorphism",
                              "map(" + source->elements[static_cast<std::size_t>(x)] + "*" +
                                  source->elements[static_cast<std::size_t>(y)] +
                                  ") != map(x)*map(y)");
    }

  if (source->unit && target->unit && map[static_cast<std::size_t>(*source->unit)] != *target->unit)
    throw ValidationError("UnitNotPreserved", "unit maps to '" +
                                                  target->elements[static_cast<std::size_t>(
                                                      map[static_cast<std::size_t>(*source->unit)])] +
                                                  "', not the unit");

  return Morphism{std::move(source), std::move(target), std::move(map)};
}

Morphism identity_morphism(const TablePtr& s) {
  std::vector<int> map(static_cast<std::size_t>(s->size()));
  for (int i = 0; i < s->size(); ++i) map[static_cast<std::size_t>(i)] = i;
  return Morphism{s, s, std::move(map)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(*f.target == *g.source))
    throw UsageError("BaseMismatch", "morphisms are not composable");
  std::vector<int> map(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i)
    map[i] = g.map[static_cast<std::size_t>(f.map[i])];
  return Morphism{f.source, g.target, std::move(map)};
}

Morphism substitution_morphism(const TablePtr& s, const std::vector<int>& x, const Caps& caps) {
  if (!s->unit) throw ValidationError("NotUnital", "substitution needs a unital table");
  if (!(s->commutative && s->idempotent))
    throw ValidationError("NotIdempotent", "substitution needs a unital semilattice");
  if (x.empty()) throw UsageError("Usage", "substitution needs at least one image");
  for (int v : x)
    if (v < 0 || v >= s->size())
      throw UsageError("IndexOutOfRange", "substitution image " + std::to_string(v) + " out of range");

  const int k = static_cast<int>(x.size());
  TablePtr source = free_unital_semilattice(k, caps);
  auto order = subset_order(k);
  std::vector<int> map(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    int prod = *s->unit;
    std::uint32_t mask = order[i];
    while (mask != 0) {
      prod = s->mul(prod, x[static_cast<std::size_t>(std::countr_zero(mask))]);
      mask &= mask - 1;
    }
    map[i] = prod;
  }
  return Morphism{std::move(source), s, std::move(map)};
}

TablePtr null_monoid() {
  // 1*x = x, n*n = z, everything else z.
  std::vector<std::string> labels = {"1", "n", "z"};
  std::vector<int> product = {0, 1, 2, 1, 2, 2, 2, 2, 2};
  return validate_table(std::move(labels), std::move(product), 0);
}

namespace {

// Backtracks over the free entries of a symmetric table (the diagonal is
// fixed when idempotent), checking associativity and the unit condition at
// the leaves.
void enumerate_symmetric_tables(int n, bool idempotent_diagonal,
                                const std::function<bool(const SemigroupTable&)>& keep,
                                std::vector<TablePtr>* out, const Caps& caps) {
  std::vector<std::pair<int, int>> slots;
  if (!idempotent_diagonal)
    for (int i = 0; i < n; ++i) slots.emplace_back(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  std::vector<int> product(static_cast<std::size_t>(n) * n, 0);
  if (idempotent_diagonal)
    for (int i = 0; i < n; ++i) product[static_cast<std::size_t>(i) * n + i] = i;

  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = enum_label(i);

  std::function<void(std::size_t)> rec = [&](std::size_t slot) {
    if (slot == slots.size()) {
      int wx, wy, wz;
      if (find_nonassociative(product, n, &wx, &wy, &wz)) return;
      auto table = validate_table(labels, product, std::nullopt, caps);
      if (keep(*table)) out->push_back(std::move(table));
      return;
    }
    auto [i, j] = slots[slot];
    for (int v = 0; v < n; ++v) {
      product[static_cast<std::size_t>(i) * n + j] = v;
      product[static_cast<std::size_t>(j) * n + i] = v;
      rec(slot + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<TablePtr> enumerate_unital_semilattices(int size, const Caps& caps) {
  if (size < 1) throw UsageError("Usage", "enumeration size must be positive");
  if (size > 5)
    throw ResourceLimitError("semilattice enumeration beyond size 5 is not supported");
  std::vector<TablePtr> out;
  enumerate_symmetric_tables(
      size, /*idempotent_diagonal=*/true,
      [](const SemigroupTable& t) { return t.is_unital_semilattice(); }, &out, caps);
  return out;
}

std::vector<TablePtr> enumerate_commutative_semigroups(int size, bool without_unit,
                                                       const Caps& caps) {
  if (size < 1) throw UsageError("Usage", "enumeration size must be positive");
  if (size > 4)
    throw ResourceLimitError("commutative semigroup enumeration beyond size 4 is not supported");
  std::vector<TablePtr> out;
  enumerate_symmetric_tables(
      size, /*idempotent_diagonal=*/false,
      [&](const SemigroupTable& t) { return !without_unit || !t.unit.has_value(); }, &out, caps);
  return out;
}

}  // namespace hochlat
