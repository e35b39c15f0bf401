#pragma once

#include <map>

#include "hochlat/rational.hpp"

namespace hochlat::detail {

// Accumulate v into m[key], keeping the map in canonical sparse form
// (no stored zeros).
template <typename K>
void add_term(std::map<K, Rational>& m, const K& key, const Rational& v) {
  if (sgn(v) == 0) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, v);
    return;
  }
  it->second += v;
  if (sgn(it->second) == 0) m.erase(it);
}

template <typename K>
void add_scaled(std::map<K, Rational>& dst, const std::map<K, Rational>& src,
                const Rational& scale) {
  if (sgn(scale) == 0) return;
  for (const auto& [key, v] : src) add_term(dst, key, Rational(v * scale));
}

template <typename K>
Rational l1_norm(const std::map<K, Rational>& m) {
  Rational total = 0;
  for (const auto& [key, v] : m) total += abs(v);
  return total;
}

}  // namespace hochlat::detail
