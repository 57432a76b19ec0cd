#include "sicsep/matcore.hpp"

#include <algorithm>
#include <numeric>

namespace sicsep {

namespace {

long long dims_product(const std::vector<int>& dims) {
  long long p = 1;
  for (int d : dims) p *= d;
  return p;
}

}  // namespace

DensityMatrix DensityMatrix::validated(std::vector<int> dims, Matrix m,
                                       double tol) {
  if (dims.empty()) throw ValidationError("dims list is empty");
  for (int d : dims)
    if (d < 2) throw ValidationError("subsystem dimension must be >= 2");
  if (m.rows() != m.cols())
    throw ValidationError("density matrix is not square");
  if (dims_product(dims) != m.rows())
    throw ValidationError("dims product does not match matrix side");

  double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol)
    throw ValidationError("not Hermitian: max deviation " +
                          std::to_string(herm_dev));
  double tr_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (tr_dev > tol)
    throw ValidationError("trace differs from 1 by " + std::to_string(tr_dev));

  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol)
    throw ValidationError("not positive semidefinite: min eigenvalue " +
                          std::to_string(min_eig));
  return DensityMatrix{std::move(dims), std::move(m)};
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionMismatch("hs_inner: operands must be square and same side");
  return (a.adjoint() * b).trace();
}

std::vector<double> hermitian_eigenvalues(const Matrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("hermitian_eigenvalues: matrix is not square");
  double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-8)
    throw ValidationError("hermitian_eigenvalues: input deviates from "
                          "Hermiticity by " + std::to_string(dev));
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + a.rows());
  std::sort(out.begin(), out.end());
  return out;
}

Matrix partial_transpose(const DensityMatrix& rho, int block_index) {
  const int n = rho.parties();
  if (block_index < 0 || block_index >= n)
    throw DimensionMismatch("partial_transpose: block index out of range");

  // strides of each factor in the row-major multi-index
  std::vector<long long> stride(n, 1);
  for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * rho.dims[k + 1];
  const long long D = rho.side();
  const int db = rho.dims[block_index];
  const long long sb = stride[block_index];

  Matrix out(D, D);
  for (long long r = 0; r < D; ++r) {
    const long long rb = (r / sb) % db;
    for (long long c = 0; c < D; ++c) {
      const long long cb = (c / sb) % db;
      const long long r2 = r + (cb - rb) * sb;
      const long long c2 = c + (rb - cb) * sb;
      out(r, c) = rho.mat(r2, c2);
    }
  }
  return out;
}

DensityMatrix permute_subsystems(const DensityMatrix& rho,
                                 const std::vector<int>& perm) {
  const int n = rho.parties();
  if (static_cast<int>(perm.size()) != n)
    throw DimensionMismatch("permute_subsystems: permutation size mismatch");
  std::vector<int> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      throw DimensionMismatch("permute_subsystems: not a permutation");
    seen[p] = 1;
  }

  std::vector<int> new_dims(n);
  for (int k = 0; k < n; ++k) new_dims[k] = rho.dims[perm[k]];

  std::vector<long long> old_stride(n, 1), new_stride(n, 1);
  for (int k = n - 2; k >= 0; --k) {
    old_stride[k] = old_stride[k + 1] * rho.dims[k + 1];
    new_stride[k] = new_stride[k + 1] * new_dims[k + 1];
  }

  const long long D = rho.side();
  // map each new flat index to the old flat index
  std::vector<long long> to_old(D);
  for (long long idx = 0; idx < D; ++idx) {
    long long old_idx = 0;
    for (int k = 0; k < n; ++k) {
      const long long comp = (idx / new_stride[k]) % new_dims[k];
      old_idx += comp * old_stride[perm[k]];
    }
    to_old[idx] = old_idx;
  }

  Matrix out(D, D);
  for (long long r = 0; r < D; ++r)
    for (long long c = 0; c < D; ++c) out(r, c) = rho.mat(to_old[r], to_old[c]);
  return DensityMatrix{std::move(new_dims), std::move(out)};
}

}  // namespace sicsep
