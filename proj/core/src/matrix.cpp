#include "hochlat/matrix.hpp"

#include <algorithm>

#include "hochlat/detail/sparse_map.hpp"
#include "hochlat/errors.hpp"

namespace hochlat {

namespace {

void check_index(const RationalMatrix& m, int i, int j) {
  if (i < 0 || i >= m.rows() || j < 0 || j >= m.cols())
    throw UsageError("IndexOutOfRange", "matrix index (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") out of range");
}

// Scales a row to integer entries with content 1; rank-preserving.
void normalize_row(std::map<int, Rational>& row) {
  if (row.empty()) return;
  mpz_class den_lcm = 1;
  for (const auto& [j, v] : row) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (auto& [j, v] : row) {
    v *= den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
  }
  if (num_gcd > 1)
    for (auto& [j, v] : row) v /= num_gcd;
}

}  // namespace

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {
  if (rows < 0 || cols < 0) throw UsageError("Usage", "negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[static_cast<std::size_t>(i)].emplace(i, 1);
  return m;
}

std::size_t RationalMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& row : data_) total += row.size();
  return total;
}

Rational RationalMatrix::get(int i, int j) const {
  check_index(*this, i, j);
  const auto& row = data_[static_cast<std::size_t>(i)];
  auto it = row.find(j);
  return it == row.end() ? Rational(0) : it->second;
}

void RationalMatrix::set(int i, int j, const Rational& v) {
  check_index(*this, i, j);
  auto& row = data_[static_cast<std::size_t>(i)];
  if (sgn(v) == 0)
    row.erase(j);
  else
    row[j] = v;
}

void RationalMatrix::add(int i, int j, const Rational& v) {
  check_index(*this, i, j);
  detail::add_term(data_[static_cast<std::size_t>(i)], j, v);
}

bool RationalMatrix::is_zero() const {
  for (const auto& row : data_)
    if (!row.empty()) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[static_cast<std::size_t>(i)])
      out.data_[static_cast<std::size_t>(j)].emplace(i, v);
  return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != static_cast<std::size_t>(cols_))
    throw UsageError("Usage", "vector length does not match matrix columns");
  std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, a] : data_[static_cast<std::size_t>(i)])
      out[static_cast<std::size_t>(i)] += a * v[static_cast<std::size_t>(j)];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("Usage", "matrix shapes do not compose");
  RationalMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (const auto& [k, av] : a.data_[static_cast<std::size_t>(i)])
      for (const auto& [j, bv] : b.data_[static_cast<std::size_t>(k)])
        detail::add_term(out.data_[static_cast<std::size_t>(i)], j, Rational(av * bv));
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

int RationalMatrix::rank() const {
  std::vector<std::map<int, Rational>> work = data_;
  for (auto& row : work) normalize_row(row);

  std::vector<int> active;
  for (int i = 0; i < rows_; ++i)
    if (!work[static_cast<std::size_t>(i)].empty()) active.push_back(i);

  int rank = 0;
  Rational prev(1);
  while (!active.empty()) {
    // Pivot column: fewest nonzeros among active rows, lowest index on ties.
    std::map<int, int> col_count;
    for (int i : active)
      for (const auto& [j, v] : work[static_cast<std::size_t>(i)]) ++col_count[j];
    if (col_count.empty()) break;
    int pivot_col = -1;
    int best = -1;
    for (const auto& [j, count] : col_count)
      if (best < 0 || count < best) {
        best = count;
        pivot_col = j;
      }

    // Pivot row: sparsest row with an entry in the pivot column.
    int pivot_row = -1;
    std::size_t best_nnz = 0;
    for (int i : active) {
      const auto& row = work[static_cast<std::size_t>(i)];
      if (row.find(pivot_col) == row.end()) continue;
      if (pivot_row < 0 || row.size() < best_nnz) {
        pivot_row = i;
        best_nnz = row.size();
      }
    }

    const Rational p = work[static_cast<std::size_t>(pivot_row)].at(pivot_col);
    std::vector<int> next_active;
    next_active.reserve(active.size());
    for (int i : active) {
      if (i == pivot_row) continue;
      auto& row = work[static_cast<std::size_t>(i)];
      auto it = row.find(pivot_col);
      if (it == row.end()) {
        // Fraction-free scaling step; exact and a no-op when p == prev.
        if (p != prev)
          for (auto& [j, v] : row) v = v * p / prev;
      } else {
        const Rational c = it->second;
        std::map<int, Rational> updated;
        const auto& pivot = work[static_cast<std::size_t>(pivot_row)];
        auto a = row.begin();
        auto b = pivot.begin();
        while (a != row.end() || b != pivot.end()) {
          if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
            Rational v = a->second * p / prev;
            if (sgn(v) != 0) updated.emplace_hint(updated.end(), a->first, std::move(v));
            ++a;
          } else if (a == row.end() || b->first < a->first) {
            Rational v = -c * b->second / prev;
            if (sgn(v) != 0) updated.emplace_hint(updated.end(), b->first, std::move(v));
            ++b;
          } else {
            Rational v = (a->second * p - c * b->second) / prev;
            if (sgn(v) != 0) updated.emplace_hint(updated.end(), a->first, std::move(v));
            ++a;
            ++b;
          }
        }
        row = std::move(updated);
      }
      if (!row.empty()) next_active.push_back(i);
    }
    active = std::move(next_active);
    prev = p;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
  // Reduced row echelon form over the rationals, first-nonzero pivoting.
  std::vector<std::map<int, Rational>> work = data_;
  std::vector<int> pivot_col_of_row;
  std::size_t r = 0;
  for (int col = 0; col < cols_ && r < work.size(); ++col) {
    std::size_t found = work.size();
    for (std::size_t i = r; i < work.size(); ++i)
      if (work[i].count(col)) {
        found = i;
        break;
      }
    if (found == work.size()) continue;
    std::swap(work[r], work[found]);

    const Rational p = work[r].at(col);
    if (p != 1)
      for (auto& [j, v] : work[r]) v /= p;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i == r) continue;
      auto it = work[i].find(col);
      if (it == work[i].end()) continue;
      const Rational c = it->second;
      detail::add_scaled(work[i], work[r], Rational(-c));
    }
    pivot_col_of_row.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols_), Rational(0));
    v[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t row = 0; row < pivot_col_of_row.size(); ++row) {
      auto it = work[row].find(free_col);
      if (it != work[row].end())
        v[static_cast<std::size_t>(pivot_col_of_row[row])] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hochlat
