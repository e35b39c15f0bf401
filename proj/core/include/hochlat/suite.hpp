#pragma once

#include <cstdint>

#include "hochlat/io.hpp"

namespace hochlat {

/// Configuration for one batch verification run. The seed fully determines
/// the randomized morphism selection, so identical configs produce
/// byte-identical JSON reports.
struct SuiteConfig {
  std::uint64_t seed = 0;
  int max_size = 3;  // enumerate all unital semilattices up to this size
  int jmax = 2;      // splitting/naturality degrees
  int nmax = 2;      // homology/cohomology degrees
  Caps caps;
};

struct SuiteReport {
  bool ok = false;
  json report;
};

/// Enumerates the corpus (all unital semilattices up to max_size, the free
/// table on two generators and totally ordered chains up to length 5), runs
/// vanishing + duality + splitting + naturality checks on it, and runs the
/// nonvanishing control. Deterministic for a fixed config.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace hochlat
