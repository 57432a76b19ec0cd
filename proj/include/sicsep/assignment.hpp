#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sicsep/matcore.hpp"

namespace sicsep {

/// Exact search refused: the reduced enumeration tree is too large.
class SearchSpaceTooLarge : public Error {
 public:
  SearchSpaceTooLarge(double estimate);
  double estimate;
};

/// m-way array of nonnegative correlation values, row-major.
struct WeightTensor {
  std::vector<int> shape;
  std::vector<double> values;

  int arity() const { return static_cast<int>(shape.size()); }
  long long size() const;
  double at(std::span<const int> idx) const;

  /// Validates shape/value count, clamps values in (-1e-12, 0) to 0 and
  /// rejects anything more negative.
  static WeightTensor create(std::vector<int> shape,
                             std::vector<double> values);
};

/// d index tuples, injective in every coordinate, plus their total weight.
struct Assignment {
  std::vector<std::vector<int>> rows;
  double value = 0.0;
};

/// Globally optimal rectangular matching (arity 2), cardinality
/// min(s1, s2). Ties break to the lexicographically smallest row list.
Assignment max_weight_matching(const WeightTensor& w);

/// Exact axial assignment by branch-and-bound; first coordinate kept
/// strictly increasing across rows. Throws SearchSpaceTooLarge when the
/// reduced leaf estimate exceeds 1e7.
Assignment max_axial_assignment_exact(const WeightTensor& w);

/// Greedy construction plus pairwise coordinate 2-swap local search,
/// best over seeded restarts. Value is a lower bound on the optimum.
Assignment max_axial_assignment_heuristic(const WeightTensor& w, int restarts,
                                          std::uint64_t seed);

}  // namespace sicsep
