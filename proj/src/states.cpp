#include "sicsep/states.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "jsonio.hpp"

namespace sicsep {

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

namespace {

Eigen::VectorXcd haar_pure(int d, Rng& rng) {
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_gaussian();
  return v / v.norm();
}

long long dims_product(const std::vector<int>& dims) {
  long long p = 1;
  for (int d : dims) p *= d;
  return p;
}

}  // namespace

DensityMatrix maximally_entangled(int d) {
  if (d < 2) throw Error("maximally_entangled: d must be >= 2");
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(static_cast<long>(d) * d);
  for (int i = 0; i < d; ++i) phi(static_cast<long>(i) * d + i) = 1.0 / std::sqrt(d);
  return DensityMatrix{{d, d}, phi * phi.adjoint()};
}

DensityMatrix isotropic(int d, double p) {
  if (p < 0.0 || p > 1.0) throw Error("isotropic: p must be in [0, 1]");
  DensityMatrix bell = maximally_entangled(d);
  const long long D = static_cast<long long>(d) * d;
  Matrix m = (1.0 - p) / static_cast<double>(D) * Matrix::Identity(D, D) +
             p * bell.mat;
  return DensityMatrix{{d, d}, std::move(m)};
}

DensityMatrix ghz_with_noise(int m, int d, double p) {
  if (m < 2) throw Error("ghz_with_noise: need at least 2 parties");
  if (d < 2) throw Error("ghz_with_noise: d must be >= 2");
  if (p < 0.0 || p > 1.0) throw Error("ghz_with_noise: p must be in [0, 1]");
  long long D = 1;
  for (int i = 0; i < m; ++i) D *= d;
  Eigen::VectorXcd ghz = Eigen::VectorXcd::Zero(D);
  // |i...i> has flat index i * (d^{m-1} + ... + d + 1)
  long long step = 0;
  for (long long s = 1, k = 0; k < m; ++k, s *= d) step += s;
  for (int i = 0; i < d; ++i) ghz(i * step) = 1.0 / std::sqrt(d);
  Matrix mat = (1.0 - p) / static_cast<double>(D) * Matrix::Identity(D, D) +
               p * (ghz * ghz.adjoint());
  return DensityMatrix{std::vector<int>(m, d), std::move(mat)};
}

DensityMatrix random_separable(const std::vector<int>& dims, int terms,
                               std::uint64_t seed) {
  if (terms < 1) throw Error("random_separable: terms must be >= 1");
  Rng rng(seed);
  const long long D = dims_product(dims);

  std::vector<double> weights(terms);
  double wsum = 0.0;
  for (int k = 0; k < terms; ++k) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    weights[k] = -std::log(u);  // Dirichlet(1,...,1) via exponentials
    wsum += weights[k];
  }

  Matrix m = Matrix::Zero(D, D);
  for (int k = 0; k < terms; ++k) {
    Eigen::VectorXcd prod = Eigen::VectorXcd::Ones(1);
    for (int d : dims) {
      Eigen::VectorXcd local = haar_pure(d, rng);
      Eigen::VectorXcd next(prod.size() * d);
      for (long i = 0; i < prod.size(); ++i)
        next.segment(i * d, d) = prod(i) * local;
      prod = std::move(next);
    }
    m += (weights[k] / wsum) * (prod * prod.adjoint());
  }
  return DensityMatrix{dims, std::move(m)};
}

DensityMatrix random_density(const std::vector<int>& dims, int rank,
                             std::uint64_t seed) {
  const long long D = dims_product(dims);
  if (rank < 1 || rank > D)
    throw Error("random_density: rank must be in [1, D]");
  Rng rng(seed);
  Matrix g(D, rank);
  for (long long i = 0; i < D; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.complex_gaussian();
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix{dims, std::move(m)};
}

void save_state(const DensityMatrix& rho, const std::string& path,
                const std::optional<std::string>& label) {
  std::ofstream out(path);
  if (!out) throw Error("save_state: cannot open " + path);
  out << "{\"dims\":[";
  for (size_t i = 0; i < rho.dims.size(); ++i) {
    if (i) out << ",";
    out << rho.dims[i];
  }
  out << "],\"matrix\":" << jsonio::matrix_to_json(rho.mat);
  if (label) out << ",\"label\":" << nlohmann::json(*label).dump();
  out << "}\n";
  if (!out) throw Error("save_state: write failed for " + path);
}

DensityMatrix load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_state: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("load_state: parse error: ") + e.what());
  }
  std::vector<int> dims;
  long long D = 1;
  try {
    for (const auto& d : j.at("dims")) {
      dims.push_back(d.get<int>());
      D *= dims.back();
    }
    Matrix m = jsonio::matrix_from_json(j.at("matrix"), static_cast<int>(D));
    return DensityMatrix::validated(std::move(dims), std::move(m));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("load_state: malformed file: ") +
                          e.what());
  }
}

}  // namespace sicsep
