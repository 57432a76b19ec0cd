#pragma once

#include <vector>

#include "sicsep/assignment.hpp"
#include "sicsep/matcore.hpp"
#include "sicsep/sicpovm.hpp"

namespace sicsep {

class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(double count);
  double count;
};

struct PptReport {
  int cut;                 // party index carrying the transpose
  double min_eigenvalue;   // of the partial transpose
  bool npt;                // min_eigenvalue < -1e-10, certifies entanglement
};

PptReport ppt_check(const DensityMatrix& rho, int cut);

/// Correlation tensor computed the slow way, by explicit Kronecker
/// products. Independent of the contraction path used by the solvers.
WeightTensor correlation_tensor_naive(const DensityMatrix& rho,
                                      const std::vector<GeneralSicPovm>& povms);

/// Exact J by literal enumeration of every injective selection. Refuses
/// when the enumeration exceeds `limit` leaves.
double brute_force_j(const DensityMatrix& rho,
                     const std::vector<GeneralSicPovm>& povms,
                     long long limit = 1000000);

}  // namespace sicsep
