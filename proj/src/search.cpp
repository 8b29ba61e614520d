#include "search.hpp"

#include <limits>
#include <random>

#include "errors.hpp"

namespace prl {

std::uint64_t grid_candidate_count(std::size_t dim, std::size_t value_count) {
  const std::size_t slots = dim * (dim + 1) / 2;
  std::uint64_t count = 1;
  for (std::size_t s = 0; s < slots; ++s) {
    if (count > std::numeric_limits<std::uint64_t>::max() / value_count)
      return std::numeric_limits<std::uint64_t>::max();
    count *= value_count;
  }
  return count;
}

namespace {

Matrix gram_from_slots(std::size_t n, const std::vector<Rational>& values,
                       const std::vector<std::size_t>& slot_idx) {
  Matrix g(n, n);
  std::size_t s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g.at(i, j) = values[slot_idx[s]];
      g.at(j, i) = values[slot_idx[s]];
      ++s;
    }
  return g;
}

}  // namespace

SearchResult search_forms(const LieAlgebra& l, const SearchSpec& spec) {
  if (spec.values.empty()) throw ContractError("search: empty value set");
  const std::size_t n = l.dim();
  const std::size_t slots = n * (n + 1) / 2;
  const bool solvable = is_solvable(l);

  SearchResult result;
  result.algebra_solvable = solvable;

  auto consider = [&](const std::vector<std::size_t>& slot_idx) {
    Matrix gram = gram_from_slots(n, spec.values, slot_idx);
    if (rank(gram) < n) {
      ++result.degenerate;
      return;
    }
    BilinearForm form{std::move(gram)};
    ++result.tested;
    if (is_pseudo_riemannian(l, form).pass()) {
      // main theorem: a pseudo-Riemannian structure forces solvability
      if (!solvable)
        throw InternalBug(
            "BUG: a pseudo-Riemannian form was found on a non-solvable algebra; "
            "this contradicts the solvability theorem");
      ++result.passed;
      result.passes.push_back(std::move(form));
    }
  };

  if (spec.mode == SearchSpec::Mode::grid) {
    const std::uint64_t count = grid_candidate_count(n, spec.values.size());
    if (count > spec.ceiling)
      throw LimitError(count, "grid of " + std::to_string(count) +
                                  " candidates exceeds the ceiling of " +
                                  std::to_string(spec.ceiling));
    std::vector<std::size_t> slot_idx(slots, 0);
    for (;;) {
      consider(slot_idx);
      // odometer over value indices, last slot fastest
      std::size_t s = slots;
      while (s > 0) {
        --s;
        if (++slot_idx[s] < spec.values.size()) break;
        slot_idx[s] = 0;
        if (s == 0) return result;
      }
      if (slots == 0) return result;  // single empty candidate (dim 0)
    }
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<std::size_t> slot_idx(slots);
  for (std::uint64_t it = 0; it < spec.random_count; ++it) {
    for (auto& s : slot_idx) s = static_cast<std::size_t>(rng() % spec.values.size());
    consider(slot_idx);
  }
  return result;
}

}  // namespace prl
