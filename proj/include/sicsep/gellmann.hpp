#pragma once

#include <vector>

#include "sicsep/matcore.hpp"

namespace sicsep {

/// Orthonormal traceless Hermitian basis {F_alpha} of a d-dimensional
/// space, together with F = sum_alpha F_alpha.
struct OperatorBasis {
  int dim = 0;
  std::vector<Matrix> elements;
  Matrix sum;
};

/// Generalized Gell-Mann family for 2 <= d <= 64. Ordering: symmetric
/// pairs (j<k lexicographic), antisymmetric pairs, then diagonal.
OperatorBasis gellmann_basis(int d);

}  // namespace sicsep
