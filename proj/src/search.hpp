#pragma once

#include <cstdint>

#include "product.hpp"

namespace prl {

/// Enumeration plan for symmetric Gram matrices with entries drawn from a
/// fixed value set: either the full grid over the n(n+1)/2 independent
/// entries or a seeded random sample.
struct SearchSpec {
  enum class Mode { grid, randomized };
  Mode mode = Mode::grid;
  std::vector<Rational> values;
  std::uint64_t random_count = 0;
  std::uint64_t seed = 0;
  std::uint64_t ceiling = 1u << 20;  // grid refusal threshold
};

struct SearchResult {
  std::uint64_t tested = 0;      // nondegenerate candidates checked
  std::uint64_t degenerate = 0;  // skipped, counted
  std::uint64_t passed = 0;
  std::vector<BilinearForm> passes;
  bool algebra_solvable = false;
};

/// Runs is_pseudo_riemannian over the candidate forms. Degenerate candidates
/// are skipped, not errors. Every pass is guarded by the solvability theorem:
/// a pass on a non-solvable algebra throws InternalBug (a bug report, since
/// the theorem says it cannot happen). Grid mode throws LimitError when the
/// candidate count exceeds the ceiling.
SearchResult search_forms(const LieAlgebra& l, const SearchSpec& spec);

/// Number of grid candidates |values|^(n(n+1)/2), saturating at uint64 max.
std::uint64_t grid_candidate_count(std::size_t dim, std::size_t value_count);

}  // namespace prl
