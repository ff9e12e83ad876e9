#pragma once

#include <cstdint>

#include "bdforge/serialize.hpp"

namespace bdforge {

struct SuiteOptions {
  char type = 'A';
  int rank = 1;
  long d = 5;
  /// 0 picks the hardware concurrency. BDFORGE_THREADS caps the value.
  int threads = 0;
  std::uint64_t seed = 0x5eed2024;
  /// Sampled automorphisms of the standard structure (per type).
  int automorphism_samples = 50;
  /// Sampled (pi, t) pairs per quadruple.
  int taut_samples = 20;
  /// Constructed cocycle pairs per admissible pi on the trivial quadruple.
  int cocycle_pairs = 5;
};

/// Worker count after applying BDFORGE_THREADS.
int suite_thread_count(int requested);

/// Runs every check for one type and rank and returns the report:
///   {"type", "rank", "dimension", "passed", "checks": [...],
///    "quadruples": [{"index", "triple", "r_h", "passed", "checks": [...]}]}
/// Each check is {"name", "passed", "detail"}. Output does not depend on the
/// thread count. Throws UnsupportedType / UnsupportedRank for bad input and
/// InvalidArgument for a bad d.
json run_full_suite(const SuiteOptions& opt);

}  // namespace bdforge
