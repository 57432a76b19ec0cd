#pragma once

#include <string>
#include <vector>

#include "sicsep/matcore.hpp"

namespace sicsep {

/// Some operator of the constructed POVM fails positive semidefiniteness.
class PositivityViolation : public Error {
 public:
  PositivityViolation(int alpha, double eig);
  int alpha;           // 0-based operator index
  double eigenvalue;   // offending minimum eigenvalue
};

/// t is too close to zero; the construction collapses to {I/d^2}.
class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

/// d^2 positive operators with equal purities Tr P_a^2 = a and equal
/// pairwise overlaps (1-da)/(d(d^2-1)), summing to the identity.
struct GeneralSicPovm {
  int dim = 0;
  double t = 0.0;
  double a = 0.0;
  std::vector<Matrix> operators;
};

/// Per-condition residuals of the defining equations, for validation.
struct PovmResiduals {
  double identity_sum;    // max entry of |sum P_a - I|
  double self_overlap;    // max_a |Tr P_a^2 - a|
  double cross_overlap;   // max_{a!=b} |Tr P_a P_b - (1-da)/(d(d^2-1))|
  double min_eigenvalue;  // over all operators
  bool ok() const;
};

GeneralSicPovm build_from_t(int d, double t);
GeneralSicPovm build_from_a(int d, double a);

/// Largest t > 0 for which build_from_t succeeds, bisected to 1e-12.
double max_t(int d);

/// Entrywise complex conjugation of every operator.
GeneralSicPovm conjugate(const GeneralSicPovm& povm);

PovmResiduals compute_residuals(const GeneralSicPovm& povm);

/// Outcome probabilities Tr(P_a rho).
std::vector<double> probabilities(const GeneralSicPovm& povm,
                                  const DensityMatrix& rho);

/// C(P|rho) = sum_a [Tr(P_a rho)]^2.
double index_of_coincidence(const GeneralSicPovm& povm,
                            const DensityMatrix& rho);

/// Inverts the coincidence identity for Tr(rho^2).
double purity_from_ic(const GeneralSicPovm& povm, double c);

void save_povm(const GeneralSicPovm& povm, const std::string& path);
GeneralSicPovm load_povm(const std::string& path);

}  // namespace sicsep
