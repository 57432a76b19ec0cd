#include "sicsep/gellmann.hpp"

#include <cmath>

namespace sicsep {

OperatorBasis gellmann_basis(int d) {
  if (d < 2 || d > 64)
    throw Error("gellmann_basis: dimension must be in [2, 64]");

  OperatorBasis basis;
  basis.dim = d;
  basis.elements.reserve(static_cast<size_t>(d) * d - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // symmetric block: (|j><k| + |k><j|)/sqrt(2), j < k
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix f = Matrix::Zero(d, d);
      f(j, k) = inv_sqrt2;
      f(k, j) = inv_sqrt2;
      basis.elements.push_back(std::move(f));
    }

  // antisymmetric block: -i(|j><k| - |k><j|)/sqrt(2), j < k
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Matrix f = Matrix::Zero(d, d);
      f(j, k) = Complex(0.0, -inv_sqrt2);
      f(k, j) = Complex(0.0, inv_sqrt2);
      basis.elements.push_back(std::move(f));
    }

  // diagonal block: (sum_{m<=l-1} |m><m| - l|l><l|)/sqrt(l(l+1)), l = 1..d-1
  for (int l = 1; l < d; ++l) {
    Matrix f = Matrix::Zero(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int m = 0; m < l; ++m) f(m, m) = norm;
    f(l, l) = -static_cast<double>(l) * norm;
    basis.elements.push_back(std::move(f));
  }

  basis.sum = Matrix::Zero(d, d);
  for (const Matrix& f : basis.elements) basis.sum += f;
  return basis;
}

}  // namespace sicsep
