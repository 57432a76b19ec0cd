#include "sicsep/oracles.hpp"

#include <algorithm>

namespace sicsep {

EnumerationTooLarge::EnumerationTooLarge(double count_)
    : Error("brute force refused: " + std::to_string(count_) +
            " selections exceed the limit"),
      count(count_) {}

PptReport ppt_check(const DensityMatrix& rho, int cut) {
  Matrix pt = partial_transpose(rho, cut);
  auto eigs = hermitian_eigenvalues(pt);
  PptReport r;
  r.cut = cut;
  r.min_eigenvalue = eigs.front();
  r.npt = r.min_eigenvalue < -1e-10;
  return r;
}

WeightTensor correlation_tensor_naive(
    const DensityMatrix& rho, const std::vector<GeneralSicPovm>& povms) {
  if (povms.size() != rho.dims.size())
    throw DimensionMismatch("correlation_tensor_naive: POVM count mismatch");
  std::vector<int> shape;
  long long total = 1;
  for (size_t i = 0; i < povms.size(); ++i) {
    if (povms[i].dim != rho.dims[i])
      throw DimensionMismatch("correlation_tensor_naive: POVM dim mismatch");
    shape.push_back(povms[i].dim * povms[i].dim);
    total *= shape.back();
  }
  std::vector<double> values(total);
  std::vector<int> idx(povms.size(), 0);
  for (long long f = 0; f < total; ++f) {
    Matrix op = povms[0].operators[idx[0]];
    for (size_t k = 1; k < povms.size(); ++k)
      op = tensor_product(op, povms[k].operators[idx[k]]);
    values[f] = ((op * rho.mat).trace()).real();
    for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
      if (++idx[k] < shape[k]) break;
      idx[k] = 0;
    }
  }
  return WeightTensor::create(std::move(shape), std::move(values));
}

namespace {

struct Enumerator {
  const WeightTensor& w;
  int m, d;
  std::vector<long long> strides;
  std::vector<std::vector<char>> used;
  double best = -std::numeric_limits<double>::infinity();

  explicit Enumerator(const WeightTensor& w_) : w(w_) {
    m = w.arity();
    d = *std::min_element(w.shape.begin(), w.shape.end());
    strides.assign(m, 1);
    for (int k = m - 2; k >= 0; --k) strides[k] = strides[k + 1] * w.shape[k + 1];
    used.resize(m);
    for (int i = 0; i < m; ++i) used[i].assign(w.shape[i], 0);
  }

  void row(int r, int last_first, double sum) {
    if (r == d) {
      best = std::max(best, sum);
      return;
    }
    for (int i1 = last_first + 1; i1 <= w.shape[0] - (d - r); ++i1) {
      used[0][i1] = 1;
      coord(r, 1, static_cast<long long>(i1) * strides[0], i1, sum);
      used[0][i1] = 0;
    }
  }

  void coord(int r, int c, long long flat, int first, double sum) {
    if (c == m) {
      row(r + 1, first, sum + w.values[flat]);
      return;
    }
    for (int i = 0; i < w.shape[c]; ++i) {
      if (used[c][i]) continue;
      used[c][i] = 1;
      coord(r, c + 1, flat + i * strides[c], first, sum);
      used[c][i] = 0;
    }
  }
};

double selection_count(const WeightTensor& w) {
  int d = *std::min_element(w.shape.begin(), w.shape.end());
  double est = 1.0;
  for (int k = 0; k < d; ++k)
    est *= static_cast<double>(w.shape[0] - k) / (k + 1);
  for (int i = 1; i < w.arity(); ++i)
    for (int k = 0; k < d; ++k) est *= w.shape[i] - k;
  return est;
}

}  // namespace

double brute_force_j(const DensityMatrix& rho,
                     const std::vector<GeneralSicPovm>& povms,
                     long long limit) {
  WeightTensor w = correlation_tensor_naive(rho, povms);
  double count = selection_count(w);
  if (count > static_cast<double>(limit)) throw EnumerationTooLarge(count);
  Enumerator e(w);
  e.row(0, -1, 0.0);
  return e.best;
}

}  // namespace sicsep
