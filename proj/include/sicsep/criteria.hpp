#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sicsep/assignment.hpp"
#include "sicsep/matcore.hpp"
#include "sicsep/sicpovm.hpp"

namespace sicsep {

enum class Theorem { T1, T2, T3, T4 };
enum class JMode { Exact, Heuristic };

const char* theorem_name(Theorem t);

struct CriterionVerdict {
  Theorem theorem;
  double j_value;
  JMode j_mode;
  double bound;
  bool detected;
  /// heuristic mode with detected = false: J was only lower-bounded
  bool inconclusive;
  Assignment assignment;
};

/// k disjoint blocks of 0-based party indices covering {0..n-1}.
struct PartitionSpec {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  std::vector<int> block_dims(const std::vector<int>& dims) const;
  void validate() const;

  /// "1;3,2" -> blocks {0,2} and {1} (input is 1-based).
  static PartitionSpec parse(const std::string& text, int n);
};

double bound_thm1(int d1, double a1, int d2, double a2);
double bound_thm2(int d1, double a1, int d2, double a2);
double bound_thm3(const std::vector<int>& dims, const std::vector<double>& as);
double bound_thm4(const std::vector<int>& dims, const std::vector<double>& as);

/// All correlations Tr[(⊗ P^{(i)}) rho], one tensor axis per party,
/// computed by sequential subsystem contraction.
WeightTensor correlation_tensor(const DensityMatrix& rho,
                                const std::vector<GeneralSicPovm>& povms);

std::pair<double, Assignment> j_bipartite(const DensityMatrix& rho,
                                          const GeneralSicPovm& pa,
                                          const GeneralSicPovm& pb);

std::tuple<double, JMode, Assignment> j_multipartite(
    const DensityMatrix& rho, const std::vector<GeneralSicPovm>& povms,
    JMode mode, std::uint64_t seed = 0, int restarts = 32);

CriterionVerdict detect_bipartite(const DensityMatrix& rho,
                                  const GeneralSicPovm& pa,
                                  const GeneralSicPovm& pb, Theorem theorem);

CriterionVerdict detect_multipartite(const DensityMatrix& rho,
                                     const std::vector<GeneralSicPovm>& povms,
                                     Theorem theorem, JMode mode,
                                     std::uint64_t seed = 0);

/// Regroups parties into the partition's blocks (contiguous, in block
/// order) and runs the multipartite detector on the k block dimensions.
CriterionVerdict detect_k_nonseparable(const DensityMatrix& rho,
                                       const PartitionSpec& partition,
                                       const std::vector<GeneralSicPovm>& povms,
                                       Theorem theorem, JMode mode,
                                       std::uint64_t seed = 0);

}  // namespace sicsep
