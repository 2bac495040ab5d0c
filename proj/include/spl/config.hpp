#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "spl/error.hpp"

namespace spl {

/// Generator-count limit for ideal constructions. Checked against the
/// projected number of candidates before they are materialized.
struct Budget {
  std::size_t max_generators = 200000;

  void check(const char* what, std::size_t projected) const {
    if (projected > max_generators) throw scale_limit_error(what, projected, max_generators);
  }
};

/// Budget for the Betti engine. The lcm lattice and the per-multidegree
/// Koszul complexes are what actually grow, so both are bounded separately.
struct BettiBudget {
  std::size_t max_generators = 4096;
  std::size_t max_lattice = 500000;
  std::size_t max_faces = std::size_t{1} << 16;
  /// Generator limit for the subset-based (Taylor) engine, which is exponential.
  std::size_t max_taylor_generators = 16;
};

/// Budget with SPL_BUDGET_GENS applied when it is set to a positive integer.
inline Budget default_budget() {
  Budget b;
  if (const char* env = std::getenv("SPL_BUDGET_GENS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_generators = static_cast<std::size_t>(v);
  }
  return b;
}

}  // namespace spl
