#include "sicsep/sicpovm.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sicsep/gellmann.hpp"

#include "jsonio.hpp"

namespace sicsep {

namespace {

double cross_overlap_target(int d, double a) {
  return (1.0 - d * a) / (d * (static_cast<double>(d) * d - 1.0));
}

// operators of the construction for a given t, no positivity check
std::vector<Matrix> construct_operators(const OperatorBasis& basis, double t) {
  const int d = basis.dim;
  const Matrix eye = Matrix::Identity(d, d);
  std::vector<Matrix> ops;
  ops.reserve(static_cast<size_t>(d) * d);
  for (const Matrix& f : basis.elements)
    ops.push_back(eye / (d * d) + t * (basis.sum - d * (d + 1.0) * f));
  ops.push_back(eye / (d * d) + t * (d + 1.0) * basis.sum);
  return ops;
}

double min_eigenvalue_over(const std::vector<Matrix>& ops, int* arg = nullptr) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < ops.size(); ++i) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(ops[i], Eigen::EigenvaluesOnly);
    double e = es.eigenvalues().minCoeff();
    if (e < best) {
      best = e;
      if (arg) *arg = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace

PositivityViolation::PositivityViolation(int alpha_, double eig)
    : Error("operator " + std::to_string(alpha_) +
            " is not positive semidefinite: min eigenvalue " +
            std::to_string(eig)),
      alpha(alpha_),
      eigenvalue(eig) {}

bool PovmResiduals::ok() const {
  return identity_sum <= 1e-10 && self_overlap <= 1e-9 &&
         cross_overlap <= 1e-9 && min_eigenvalue >= -1e-10;
}

GeneralSicPovm build_from_t(int d, double t) {
  if (d < 2 || d > 64) throw Error("build_from_t: dimension must be in [2, 64]");
  if (std::abs(t) < 1e-12)
    throw DegenerateParameter(
        "t too close to 0: the construction gives a = 1/d^3, outside the "
        "admissible open interval");
  if (t < 0.0) throw Error("build_from_t: only t > 0 is supported");

  const OperatorBasis basis = gellmann_basis(d);
  std::vector<Matrix> ops = construct_operators(basis, t);
  int arg = 0;
  double min_eig = min_eigenvalue_over(ops, &arg);
  if (min_eig < -1e-10) throw PositivityViolation(arg, min_eig);

  GeneralSicPovm povm;
  povm.dim = d;
  povm.t = t;
  povm.a = 1.0 / (static_cast<double>(d) * d * d) +
           t * t * (d - 1.0) * std::pow(d + 1.0, 3);
  povm.operators = std::move(ops);
  return povm;
}

GeneralSicPovm build_from_a(int d, double a) {
  if (d < 2 || d > 64) throw Error("build_from_a: dimension must be in [2, 64]");
  const double lo = 1.0 / (static_cast<double>(d) * d * d);
  const double hi = 1.0 / (static_cast<double>(d) * d);
  if (!(a > lo && a <= hi))
    throw Error("build_from_a: a must satisfy 1/d^3 < a <= 1/d^2");
  const double t = std::sqrt((a - lo) / ((d - 1.0) * std::pow(d + 1.0, 3)));
  return build_from_t(d, t);
}

double max_t(int d) {
  if (d < 2 || d > 64) throw Error("max_t: dimension must be in [2, 64]");
  const OperatorBasis basis = gellmann_basis(d);
  auto feasible = [&](double t) {
    return min_eigenvalue_over(construct_operators(basis, t)) >= 0.0;
  };
  double lo = 1e-9, hi = 1e-9;
  while (feasible(hi) && hi < 1.0) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

GeneralSicPovm conjugate(const GeneralSicPovm& povm) {
  GeneralSicPovm out;
  out.dim = povm.dim;
  out.t = povm.t;
  out.a = povm.a;
  out.operators.reserve(povm.operators.size());
  for (const Matrix& p : povm.operators) out.operators.push_back(p.conjugate());
  return out;
}

PovmResiduals compute_residuals(const GeneralSicPovm& povm) {
  const int d = povm.dim;
  const size_t n = povm.operators.size();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& p : povm.operators) sum += p;

  PovmResiduals r{};
  r.identity_sum = (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  r.self_overlap = 0.0;
  r.cross_overlap = 0.0;
  const double target = cross_overlap_target(d, povm.a);
  for (size_t i = 0; i < n; ++i) {
    double self = std::real((povm.operators[i] * povm.operators[i]).trace());
    r.self_overlap = std::max(r.self_overlap, std::abs(self - povm.a));
    for (size_t j = i + 1; j < n; ++j) {
      double cross =
          std::real((povm.operators[i] * povm.operators[j]).trace());
      r.cross_overlap = std::max(r.cross_overlap, std::abs(cross - target));
    }
  }
  r.min_eigenvalue = min_eigenvalue_over(povm.operators);
  return r;
}

std::vector<double> probabilities(const GeneralSicPovm& povm,
                                  const DensityMatrix& rho) {
  if (rho.side() != povm.dim)
    throw DimensionMismatch("probabilities: state side does not match POVM");
  std::vector<double> out;
  out.reserve(povm.operators.size());
  for (const Matrix& p : povm.operators)
    out.push_back(std::real((p * rho.mat).trace()));
  return out;
}

double index_of_coincidence(const GeneralSicPovm& povm,
                            const DensityMatrix& rho) {
  double c = 0.0;
  for (double p : probabilities(povm, rho)) c += p * p;
  return c;
}

double purity_from_ic(const GeneralSicPovm& povm, double c) {
  const int d = povm.dim;
  const double denom = povm.a * d * d * d - 1.0;
  if (std::abs(denom) <= 1e-12)
    throw Error("purity_from_ic: degenerate denominator a*d^3 - 1");
  return (c * d * (static_cast<double>(d) * d - 1.0) -
          d * (1.0 - povm.a * d)) /
         denom;
}

void save_povm(const GeneralSicPovm& povm, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_povm: cannot open " + path);
  out << "{\"dim\":" << povm.dim << ",\"t\":" << jsonio::fmt_double(povm.t)
      << ",\"a\":" << jsonio::fmt_double(povm.a) << ",\"operators\":[";
  for (size_t i = 0; i < povm.operators.size(); ++i) {
    if (i) out << ",";
    out << jsonio::matrix_to_json(povm.operators[i]);
  }
  out << "]}\n";
  if (!out) throw Error("save_povm: write failed for " + path);
}

GeneralSicPovm load_povm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_povm: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("load_povm: parse error: ") + e.what());
  }
  GeneralSicPovm povm;
  try {
    povm.dim = j.at("dim").get<int>();
    povm.t = j.at("t").get<double>();
    povm.a = j.at("a").get<double>();
    const auto& ops = j.at("operators");
    if (!ops.is_array() ||
        ops.size() != static_cast<size_t>(povm.dim) * povm.dim)
      throw ValidationError("load_povm: expected d^2 operators");
    for (const auto& o : ops)
      povm.operators.push_back(jsonio::matrix_from_json(o, povm.dim));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("load_povm: malformed file: ") +
                          e.what());
  }
  return povm;
}

}  // namespace sicsep
