#pragma once

#include <cstddef>
#include <vector>

#include "modo/objective.hpp"
#include "modo/problems.hpp"

namespace modo {

inline constexpr std::size_t kOracleMaxBinary = 24;
inline constexpr std::size_t kOracleMaxCities = 10;

// Pareto frontier by exhaustive enumeration: every binary vector (binary
// classes, n <= 24) or every tour starting at city 1 (TSP, n <= 10), each
// evaluated directly by evaluate(). Result is in the instance's original
// sense, sorted ascending. Throws ResourceError(kEnumeration) past the bounds.
std::vector<ObjectiveVector> brute_force_frontier(const Instance& inst);

}  // namespace modo
