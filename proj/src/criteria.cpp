#include "sicsep/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sicsep {

namespace {

double bound_term(int d, double a) {
  const double lo = 1.0 / (static_cast<double>(d) * d * d);
  const double hi = 1.0 / (static_cast<double>(d) * d);
  // closed at the lower end: the bound formula itself is fine at a = 1/d^3
  if (!(a >= lo * (1.0 - 1e-12) && a <= hi * (1.0 + 1e-12)))
    throw Error("criterion bound: parameter a = " + std::to_string(a) +
                " outside (1/d^3, 1/d^2] for d = " + std::to_string(d));
  return (a * d * d + 1.0) / (d * (d + 1.0));
}

// Contracts the first tensor factor: X(p,q) = sum_{i,j} A(i,j) M(j*R+p, i*R+q),
// so that Tr[(A (x) B) M] = Tr[B X] for any B on the remaining factors.
Matrix contract_first(const Matrix& m, const Matrix& a) {
  const Eigen::Index d0 = a.rows();
  const Eigen::Index rest = m.rows() / d0;
  Matrix x = Matrix::Zero(rest, rest);
  for (Eigen::Index i = 0; i < d0; ++i)
    for (Eigen::Index j = 0; j < d0; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      x.noalias() += aij * m.block(j * rest, i * rest, rest, rest);
    }
  return x;
}

void fill_correlations(const Matrix& m,
                       const std::vector<GeneralSicPovm>& povms, size_t party,
                       std::vector<double>& out, long long offset,
                       long long stride) {
  const auto& ops = povms[party].operators;
  const bool last = party + 1 == povms.size();
  const long long next_stride =
      last ? 1
           : stride / (static_cast<long long>(povms[party + 1].dim) *
                       povms[party + 1].dim);
  for (size_t j = 0; j < ops.size(); ++j) {
    Matrix x = contract_first(m, ops[j]);
    if (last)
      out[offset + static_cast<long long>(j)] = x(0, 0).real();
    else
      fill_correlations(x, povms, party + 1, out,
                        offset + static_cast<long long>(j) * stride,
                        next_stride);
  }
}

}  // namespace

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
  }
  return "?";
}

std::vector<int> PartitionSpec::block_dims(const std::vector<int>& dims) const {
  std::vector<int> out;
  for (const auto& block : blocks) {
    int d = 1;
    for (int p : block) d *= dims[p];
    out.push_back(d);
  }
  return out;
}

void PartitionSpec::validate() const {
  if (static_cast<int>(blocks.size()) < 2)
    throw Error("partition must have at least 2 blocks");
  std::vector<int> seen(n, 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw Error("partition block is empty");
    for (int p : block) {
      if (p < 0 || p >= n || seen[p])
        throw Error("partition does not partition the parties");
      seen[p] = 1;
    }
  }
  for (int s : seen)
    if (!s) throw Error("partition does not cover all parties");
}

PartitionSpec PartitionSpec::parse(const std::string& text, int n) {
  PartitionSpec spec;
  spec.n = n;
  std::stringstream blocks_in(text);
  std::string block_text;
  while (std::getline(blocks_in, block_text, ',')) {
    std::vector<int> block;
    std::stringstream members_in(block_text);
    std::string member;
    while (std::getline(members_in, member, ';')) {
      size_t pos = 0;
      int v;
      try {
        v = std::stoi(member, &pos);
      } catch (const std::exception&) {
        throw Error("partition spec: cannot parse party index '" + member +
                    "'");
      }
      if (pos != member.size())
        throw Error("partition spec: trailing characters in '" + member + "'");
      block.push_back(v - 1);
    }
    spec.blocks.push_back(std::move(block));
  }
  spec.validate();
  return spec;
}

double bound_thm1(int d1, double a1, int d2, double a2) {
  return 0.5 * (bound_term(d1, a1) + bound_term(d2, a2));
}

double bound_thm2(int d1, double a1, int d2, double a2) {
  return std::sqrt(bound_term(d1, a1)) * std::sqrt(bound_term(d2, a2));
}

double bound_thm3(const std::vector<int>& dims,
                  const std::vector<double>& as) {
  if (dims.size() != as.size() || dims.size() < 2)
    throw Error("bound_thm3: need matching dims/as lists of length >= 2");
  double sum = 0.0;
  for (size_t i = 0; i < dims.size(); ++i) sum += bound_term(dims[i], as[i]);
  return sum / static_cast<double>(dims.size());
}

double bound_thm4(const std::vector<int>& dims,
                  const std::vector<double>& as) {
  if (dims.size() != as.size() || dims.size() < 2)
    throw Error("bound_thm4: need matching dims/as lists of length >= 2");
  std::vector<double> terms(dims.size());
  for (size_t i = 0; i < dims.size(); ++i)
    terms[i] = bound_term(dims[i], as[i]);
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < terms.size(); ++i)
    for (size_t j = i + 1; j < terms.size(); ++j)
      best = std::min(best, std::sqrt(terms[i]) * std::sqrt(terms[j]));
  return best;
}

WeightTensor correlation_tensor(const DensityMatrix& rho,
                                const std::vector<GeneralSicPovm>& povms) {
  if (povms.size() != rho.dims.size())
    throw DimensionMismatch("correlation_tensor: POVM count != party count");
  std::vector<int> shape;
  long long total = 1;
  for (size_t i = 0; i < povms.size(); ++i) {
    if (povms[i].dim != rho.dims[i])
      throw DimensionMismatch("correlation_tensor: POVM dim mismatch at party " +
                              std::to_string(i));
    shape.push_back(povms[i].dim * povms[i].dim);
    total *= shape.back();
  }
  std::vector<double> values(total, 0.0);
  fill_correlations(rho.mat, povms, 0, values, 0, total / shape[0]);
  return WeightTensor::create(std::move(shape), std::move(values));
}

std::pair<double, Assignment> j_bipartite(const DensityMatrix& rho,
                                          const GeneralSicPovm& pa,
                                          const GeneralSicPovm& pb) {
  if (rho.parties() != 2)
    throw DimensionMismatch("j_bipartite: state must have exactly 2 parties");
  Assignment a = max_weight_matching(correlation_tensor(rho, {pa, pb}));
  return {a.value, std::move(a)};
}

std::tuple<double, JMode, Assignment> j_multipartite(
    const DensityMatrix& rho, const std::vector<GeneralSicPovm>& povms,
    JMode mode, std::uint64_t seed, int restarts) {
  WeightTensor w = correlation_tensor(rho, povms);
  Assignment a;
  if (mode == JMode::Exact) {
    a = w.arity() == 2 ? max_weight_matching(w)
                       : max_axial_assignment_exact(w);
  } else {
    a = max_axial_assignment_heuristic(w, restarts, seed);
  }
  return {a.value, mode, std::move(a)};
}

namespace {

CriterionVerdict make_verdict(Theorem theorem, double j, JMode mode,
                              double bound, Assignment assignment) {
  CriterionVerdict v;
  v.theorem = theorem;
  v.j_value = j;
  v.j_mode = mode;
  v.bound = bound;
  v.detected = j > bound + 1e-12;
  v.inconclusive = (mode == JMode::Heuristic && !v.detected);
  v.assignment = std::move(assignment);
  return v;
}

}  // namespace

CriterionVerdict detect_bipartite(const DensityMatrix& rho,
                                  const GeneralSicPovm& pa,
                                  const GeneralSicPovm& pb, Theorem theorem) {
  if (theorem != Theorem::T1 && theorem != Theorem::T2)
    throw Error("detect_bipartite: theorem must be T1 or T2");
  auto [j, assignment] = j_bipartite(rho, pa, pb);
  double bound = theorem == Theorem::T1
                     ? bound_thm1(pa.dim, pa.a, pb.dim, pb.a)
                     : bound_thm2(pa.dim, pa.a, pb.dim, pb.a);
  return make_verdict(theorem, j, JMode::Exact, bound, std::move(assignment));
}

CriterionVerdict detect_multipartite(const DensityMatrix& rho,
                                     const std::vector<GeneralSicPovm>& povms,
                                     Theorem theorem, JMode mode,
                                     std::uint64_t seed) {
  if (theorem != Theorem::T3 && theorem != Theorem::T4)
    throw Error("detect_multipartite: theorem must be T3 or T4");
  std::vector<int> dims;
  std::vector<double> as;
  for (const auto& p : povms) {
    dims.push_back(p.dim);
    as.push_back(p.a);
  }
  auto [j, used_mode, assignment] = j_multipartite(rho, povms, mode, seed);
  double bound = theorem == Theorem::T3 ? bound_thm3(dims, as)
                                        : bound_thm4(dims, as);
  return make_verdict(theorem, j, used_mode, bound, std::move(assignment));
}

CriterionVerdict detect_k_nonseparable(const DensityMatrix& rho,
                                       const PartitionSpec& partition,
                                       const std::vector<GeneralSicPovm>& povms,
                                       Theorem theorem, JMode mode,
                                       std::uint64_t seed) {
  partition.validate();
  if (partition.n != rho.parties())
    throw DimensionMismatch("detect_k_nonseparable: partition party count");
  if (povms.size() != partition.blocks.size())
    throw DimensionMismatch(
        "detect_k_nonseparable: need one POVM per partition block");

  std::vector<int> perm;
  for (const auto& block : partition.blocks)
    perm.insert(perm.end(), block.begin(), block.end());
  DensityMatrix grouped = permute_subsystems(rho, perm);

  std::vector<int> block_dims = partition.block_dims(rho.dims);
  for (size_t i = 0; i < povms.size(); ++i)
    if (povms[i].dim != block_dims[i])
      throw DimensionMismatch("detect_k_nonseparable: POVM dim " +
                              std::to_string(povms[i].dim) +
                              " does not match block dim " +
                              std::to_string(block_dims[i]));
  DensityMatrix regrouped{block_dims, std::move(grouped.mat)};
  return detect_multipartite(regrouped, povms, theorem, mode, seed);
}

}  // namespace sicsep
