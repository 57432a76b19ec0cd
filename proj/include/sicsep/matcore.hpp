#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sicsep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when an input fails density-matrix or POVM validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A state on a tensor product of subsystems. `dims` lists the local
/// dimensions in tensor order; `mat` has side prod(dims).
struct DensityMatrix {
  std::vector<int> dims;
  Matrix mat;

  int side() const { return static_cast<int>(mat.rows()); }
  int parties() const { return static_cast<int>(dims.size()); }

  /// Checks Hermiticity, unit trace and positivity at tolerance `tol`
  /// and throws ValidationError naming the violated invariant.
  static DensityMatrix validated(std::vector<int> dims, Matrix m,
                                 double tol = 1e-8);
};

/// Kronecker product, (a⊗b)[(i*rb+k),(j*cb+l)] = a(i,j)*b(k,l).
Matrix tensor_product(const Matrix& a, const Matrix& b);

/// Hilbert-Schmidt pairing Tr(a† b). Throws on side mismatch.
Complex hs_inner(const Matrix& a, const Matrix& b);

/// Ascending real spectrum of a Hermitian matrix. Throws if the input
/// deviates from Hermiticity by more than 1e-8 in any entry.
std::vector<double> hermitian_eigenvalues(const Matrix& a);

/// Transpose applied to one tensor factor only.
Matrix partial_transpose(const DensityMatrix& rho, int block_index);

/// Reorders tensor factors: party k of the result is party perm[k] of
/// the input (0-based).
DensityMatrix permute_subsystems(const DensityMatrix& rho,
                                 const std::vector<int>& perm);

}  // namespace sicsep
