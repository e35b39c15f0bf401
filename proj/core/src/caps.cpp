#include "hochlat/caps.hpp"

#include <cstdlib>
#include <limits>

namespace hochlat {

Caps Caps::from_env() {
  Caps caps;
  if (const char* env = std::getenv("HOCHLAT_CAP_DIM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw UsageError("Usage", "HOCHLAT_CAP_DIM must be a positive integer, got '" +
                                    std::string(env) + "'");
    caps.max_chain_dim = v;
  }
  return caps;
}

std::uint64_t pow_sat(std::uint64_t base, int exp) {
  constexpr std::uint64_t kSat = std::uint64_t(1) << 63;
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > kSat / base) return kSat;
    result *= base;
  }
  return result;
}

void require_table_size(int size, const Caps& caps) {
  if (size > caps.max_table_size)
    throw ResourceLimitError("table size " + std::to_string(size) + " exceeds cap " +
                             std::to_string(caps.max_table_size));
}

void require_dim(std::uint64_t dim, const Caps& caps, const std::string& what) {
  if (dim > caps.max_chain_dim)
    throw ResourceLimitError(what + " dimension " + std::to_string(dim) + " exceeds cap " +
                             std::to_string(caps.max_chain_dim));
}

}  // namespace hochlat
