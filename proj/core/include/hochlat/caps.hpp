#pragma once

#include <cstdint>
#include <string>

#include "hochlat/errors.hpp"

namespace hochlat {

/// Resource caps. Tensor-power bases grow as |S|^(n+1), so every operation
/// that enumerates a tuple basis checks against `max_chain_dim` first.
struct Caps {
  int max_table_size = 64;
  std::uint64_t max_chain_dim = 2'000'000;

  /// Default caps, with HOCHLAT_CAP_DIM (if set) overriding max_chain_dim.
  static Caps from_env();
};

/// size^arity, saturating at 2^63 so comparisons against caps stay safe.
std::uint64_t pow_sat(std::uint64_t base, int exp);

void require_table_size(int size, const Caps& caps);
void require_dim(std::uint64_t dim, const Caps& caps, const std::string& what);

}  // namespace hochlat
