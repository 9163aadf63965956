#include "modo/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "modo/errors.hpp"

namespace modo {

std::vector<ObjectiveVector> brute_force_frontier(const Instance& inst) {
  validate(inst);
  std::vector<ObjectiveVector> images;
  auto consider = [&](const std::vector<std::int64_t>& x) {
    const Evaluation ev = evaluate(inst, x);
    if (!ev.feasible) return;
    images.push_back(inst.sense == Sense::kMin ? -ev.value : ev.value);
    // Keep memory bounded on large enumerations.
    if (images.size() >= (1U << 16)) images = nd_filter(std::move(images));
  };

  if (inst.problem == ProblemClass::kTsp) {
    if (inst.n > kOracleMaxCities) throw ResourceError(ResourceKind::kEnumeration, "oracle: too many cities");
    std::vector<std::int64_t> tour(inst.n);
    std::iota(tour.begin(), tour.end(), std::int64_t{1});
    do {
      // A tour and its reversal have equal length; keep one orientation.
      if (inst.n > 2 && tour[1] > tour.back()) continue;
      consider(tour);
    } while (std::next_permutation(tour.begin() + 1, tour.end()));
  } else {
    if (inst.n > kOracleMaxBinary) throw ResourceError(ResourceKind::kEnumeration, "oracle: too many variables");
    std::vector<std::int64_t> x(inst.n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.n); ++mask) {
      for (std::size_t j = 0; j < inst.n; ++j) x[j] = static_cast<std::int64_t>((mask >> j) & 1U);
      consider(x);
    }
  }
  auto frontier = nd_filter(std::move(images));
  return inst.sense == Sense::kMin ? negate_all(std::move(frontier)) : frontier;
}

}  // namespace modo
