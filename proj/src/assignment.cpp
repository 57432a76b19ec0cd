#include "sicsep/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace sicsep {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<long long> strides_of(const std::vector<int>& shape) {
  std::vector<long long> s(shape.size(), 1);
  for (int k = static_cast<int>(shape.size()) - 2; k >= 0; --k)
    s[k] = s[k + 1] * shape[k + 1];
  return s;
}

std::vector<std::vector<int>> sorted_rows(std::vector<std::vector<int>> rows) {
  std::sort(rows.begin(), rows.end());
  return rows;
}

// ---- Hungarian (JV style) on a square min-cost matrix, with duals ----

struct HungarianResult {
  std::vector<int> row_to_col;
  std::vector<double> u, v;  // cost[i][j] - u[i] - v[j] >= 0, tight matched
};

HungarianResult hungarian_min(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j)
        if (!used[j]) {
          double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
          if (minv[j] < delta) {
            delta = minv[j];
            j1 = j;
          }
        }
      for (int j = 0; j <= n; ++j)
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  HungarianResult r;
  r.row_to_col.assign(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] > 0) r.row_to_col[p[j] - 1] = j - 1;
  r.u.assign(n, 0.0);
  r.v.assign(n, 0.0);
  for (int i = 0; i < n; ++i) r.u[i] = u[i + 1];
  for (int j = 0; j < n; ++j) r.v[j] = v[j + 1];
  return r;
}

// maximum matching (Kuhn) on an adjacency list, used for the feasibility
// checks of the lexicographic tie-break
bool kuhn_try(int row, const std::vector<std::vector<int>>& adj,
              std::vector<int>& col_to_row, std::vector<char>& vis) {
  for (int c : adj[row]) {
    if (vis[c]) continue;
    vis[c] = 1;
    if (col_to_row[c] < 0 ||
        kuhn_try(col_to_row[c], adj, col_to_row, vis)) {
      col_to_row[c] = row;
      return true;
    }
  }
  return false;
}

bool has_perfect_matching(const std::vector<std::vector<int>>& adj,
                          const std::vector<int>& rows, int ncols) {
  std::vector<int> col_to_row(ncols, -1);
  for (int r : rows) {
    std::vector<char> vis(ncols, 0);
    if (!kuhn_try(r, adj, col_to_row, vis)) return false;
  }
  return true;
}

}  // namespace

SearchSpaceTooLarge::SearchSpaceTooLarge(double estimate_)
    : Error("exact search refused: estimated " + std::to_string(estimate_) +
            " leaf nodes exceeds 1e7"),
      estimate(estimate_) {}

long long WeightTensor::size() const {
  long long s = 1;
  for (int d : shape) s *= d;
  return s;
}

double WeightTensor::at(std::span<const int> idx) const {
  long long flat = 0;
  auto st = strides_of(shape);
  for (size_t k = 0; k < shape.size(); ++k) flat += idx[k] * st[k];
  return values[flat];
}

WeightTensor WeightTensor::create(std::vector<int> shape,
                                  std::vector<double> values) {
  if (shape.size() < 2) throw Error("WeightTensor: arity must be >= 2");
  long long n = 1;
  for (int s : shape) {
    if (s < 1) throw Error("WeightTensor: shape entries must be >= 1");
    n *= s;
  }
  if (static_cast<long long>(values.size()) != n)
    throw Error("WeightTensor: value count does not match shape");
  for (double& v : values) {
    if (v < -1e-12)
      throw Error("WeightTensor: negative value " + std::to_string(v));
    if (v < 0.0) v = 0.0;
  }
  return WeightTensor{std::move(shape), std::move(values)};
}

Assignment max_weight_matching(const WeightTensor& w) {
  if (w.arity() != 2) throw Error("max_weight_matching: arity must be 2");
  const int s1 = w.shape[0], s2 = w.shape[1];
  const int n = std::max(s1, s2);
  auto weight = [&](int i, int j) -> double {
    return (i < s1 && j < s2) ? w.values[static_cast<long long>(i) * s2 + j]
                              : 0.0;
  };

  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cost[i][j] = -weight(i, j);
  HungarianResult hr = hungarian_min(cost);

  double opt = 0.0;
  for (int i = 0; i < s1; ++i)
    if (hr.row_to_col[i] < s2) opt += weight(i, hr.row_to_col[i]);

  // Tight subgraph: every optimal matching lives in it, and every perfect
  // matching of it is optimal. The lexicographically smallest optimal row
  // list is built greedily with a feasibility check per candidate edge.
  double scale = 1.0;
  for (const auto& row : cost)
    for (double c : row) scale = std::max(scale, std::abs(c));
  const double eps = 1e-9 * scale;
  std::vector<std::vector<int>> tight(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cost[i][j] - hr.u[i] - hr.v[j] <= eps) tight[i].push_back(j);

  std::vector<int> chosen(n, -1);
  std::vector<char> col_used(n, 0);
  bool greedy_ok = true;
  for (int i = 0; i < n && greedy_ok; ++i) {
    std::vector<int> rest;
    for (int r = i + 1; r < n; ++r) rest.push_back(r);
    bool fixed = false;
    for (int j : tight[i]) {
      if (col_used[j]) continue;
      // adjacency of the remaining rows with column j removed
      std::vector<std::vector<int>> adj(n);
      for (int r : rest)
        for (int c : tight[r])
          if (!col_used[c] && c != j) adj[r].push_back(c);
      if (has_perfect_matching(adj, rest, n)) {
        chosen[i] = j;
        col_used[j] = 1;
        fixed = true;
        break;
      }
    }
    if (!fixed) greedy_ok = false;
  }

  double val = 0.0;
  if (greedy_ok)
    for (int i = 0; i < s1; ++i)
      if (chosen[i] < s2) val += weight(i, chosen[i]);
  if (!greedy_ok || val < opt - 1e-12 * std::max(1.0, std::abs(opt))) {
    // numerical near-ties confused the tight graph; keep the plain optimum
    chosen = hr.row_to_col;
    val = opt;
  }

  Assignment a;
  for (int i = 0; i < s1; ++i)
    if (chosen[i] < s2) a.rows.push_back({i, chosen[i]});
  a.rows = sorted_rows(std::move(a.rows));
  a.value = val;
  return a;
}

namespace {

struct ExactSearch {
  const WeightTensor& w;
  int m, d;
  std::vector<long long> strides;
  std::vector<std::vector<char>> used;  // per coordinate
  std::vector<std::vector<double>> topsum;  // [start][need] over colmax
  std::vector<int> current;                 // m*d flattened rows
  double best = -kInf;
  std::vector<std::vector<int>> best_rows;

  explicit ExactSearch(const WeightTensor& w_) : w(w_) {
    m = w.arity();
    d = *std::min_element(w.shape.begin(), w.shape.end());
    strides = strides_of(w.shape);
    used.resize(m);
    for (int i = 0; i < m; ++i) used[i].assign(w.shape[i], 0);
    current.assign(static_cast<size_t>(m) * d, 0);

    // per-first-coordinate maxima and their suffix top-k sums
    const int s1 = w.shape[0];
    std::vector<double> colmax(s1, 0.0);
    for (long long f = 0; f < w.size(); ++f) {
      int i1 = static_cast<int>(f / strides[0]);
      colmax[i1] = std::max(colmax[i1], w.values[f]);
    }
    topsum.assign(s1 + 1, std::vector<double>(d + 1, 0.0));
    for (int start = s1; start >= 0; --start) {
      std::vector<double> suffix(colmax.begin() + start, colmax.end());
      std::sort(suffix.begin(), suffix.end(), std::greater<>());
      for (int need = 1; need <= d; ++need)
        topsum[start][need] =
            topsum[start][need - 1] +
            (need - 1 < static_cast<int>(suffix.size()) ? suffix[need - 1]
                                                        : -kInf);
    }
  }

  void run() { row(0, -1, 0.0); }

  void row(int r, int last_first, double sum) {
    if (r == d) {
      if (sum > best) {
        best = sum;
        best_rows.clear();
        for (int j = 0; j < d; ++j)
          best_rows.emplace_back(current.begin() + static_cast<long>(j) * m,
                                 current.begin() + static_cast<long>(j + 1) * m);
      }
      return;
    }
    if (best > -kInf && sum + topsum[last_first + 1][d - r] <= best) return;
    const int s1 = w.shape[0];
    for (int i1 = last_first + 1; i1 <= s1 - (d - r); ++i1) {
      current[static_cast<size_t>(r) * m] = i1;
      used[0][i1] = 1;
      coord(r, 1, static_cast<long long>(i1) * strides[0], sum);
      used[0][i1] = 0;
    }
  }

  void coord(int r, int c, long long flat, double sum) {
    if (c == m) {
      row(r + 1, current[static_cast<size_t>(r) * m], sum + w.values[flat]);
      return;
    }
    for (int i = 0; i < w.shape[c]; ++i) {
      if (used[c][i]) continue;
      used[c][i] = 1;
      current[static_cast<size_t>(r) * m + c] = i;
      coord(r, c + 1, flat + i * strides[c], sum);
      used[c][i] = 0;
    }
  }
};

double exact_leaf_estimate(const WeightTensor& w) {
  int d = *std::min_element(w.shape.begin(), w.shape.end());
  // C(s1, d) choices of increasing first coordinates, falling factorials
  // for the rest
  double est = 1.0;
  for (int k = 0; k < d; ++k)
    est *= static_cast<double>(w.shape[0] - k) / (k + 1);
  for (int i = 1; i < w.arity(); ++i)
    for (int k = 0; k < d; ++k) est *= w.shape[i] - k;
  return est;
}

}  // namespace

Assignment max_axial_assignment_exact(const WeightTensor& w) {
  double est = exact_leaf_estimate(w);
  if (est > 1e7) throw SearchSpaceTooLarge(est);
  ExactSearch search(w);
  search.run();
  Assignment a;
  a.rows = sorted_rows(std::move(search.best_rows));
  a.value = search.best;
  return a;
}

namespace {

double assignment_value(const WeightTensor& w,
                        const std::vector<std::vector<int>>& rows) {
  double v = 0.0;
  for (const auto& r : rows) v += w.at(r);
  return v;
}

std::vector<std::vector<int>> greedy_rows(
    const WeightTensor& w, const std::vector<long long>& order,
    const std::vector<long long>& strides, int d, std::mt19937_64* rng) {
  const int m = w.arity();
  std::vector<std::vector<char>> used(m);
  for (int i = 0; i < m; ++i) used[i].assign(w.shape[i], 0);
  auto decode = [&](long long f) {
    std::vector<int> t(m);
    for (int k = 0; k < m; ++k) t[k] = static_cast<int>((f / strides[k]) % w.shape[k]);
    return t;
  };
  auto feasible = [&](const std::vector<int>& t) {
    for (int k = 0; k < m; ++k)
      if (used[k][t[k]]) return false;
    return true;
  };
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < d; ++r) {
    // collect the first few feasible tuples in weight order; restarts pick
    // randomly among them, the base pass takes the best
    std::vector<std::vector<int>> cand;
    for (long long f : order) {
      auto t = decode(f);
      if (feasible(t)) {
        cand.push_back(std::move(t));
        if (!rng || cand.size() == 3) break;
      }
    }
    if (cand.empty()) break;
    size_t pick = 0;
    if (rng && cand.size() > 1)
      pick = (*rng)() % cand.size();
    auto& t = cand[pick];
    for (int k = 0; k < m; ++k) used[k][t[k]] = 1;
    rows.push_back(t);
  }
  return rows;
}

void local_search(const WeightTensor& w, std::vector<std::vector<int>>& rows) {
  const int m = w.arity();
  const int d = static_cast<int>(rows.size());
  bool improved = true;
  while (improved) {
    improved = false;
    // 2-swap of one coordinate between two rows
    for (int r1 = 0; r1 < d; ++r1)
      for (int r2 = r1 + 1; r2 < d; ++r2)
        for (int k = 0; k < m; ++k) {
          double before = w.at(rows[r1]) + w.at(rows[r2]);
          std::swap(rows[r1][k], rows[r2][k]);
          double after = w.at(rows[r1]) + w.at(rows[r2]);
          if (after > before + 1e-15) {
            improved = true;
          } else {
            std::swap(rows[r1][k], rows[r2][k]);
          }
        }
    // move a coordinate to an unused index
    for (int k = 0; k < m; ++k) {
      if (w.shape[k] == d) continue;
      std::vector<char> used(w.shape[k], 0);
      for (const auto& r : rows) used[r[k]] = 1;
      for (int r = 0; r < d; ++r)
        for (int idx = 0; idx < w.shape[k]; ++idx) {
          if (used[idx]) continue;
          double before = w.at(rows[r]);
          int old = rows[r][k];
          rows[r][k] = idx;
          if (w.at(rows[r]) > before + 1e-15) {
            used[old] = 0;
            used[idx] = 1;
            improved = true;
          } else {
            rows[r][k] = old;
          }
        }
    }
  }
}

}  // namespace

Assignment max_axial_assignment_heuristic(const WeightTensor& w, int restarts,
                                          std::uint64_t seed) {
  if (restarts < 1) throw Error("heuristic: restarts must be >= 1");
  const int d = *std::min_element(w.shape.begin(), w.shape.end());
  auto strides = strides_of(w.shape);

  std::vector<long long> order(w.values.size());
  for (long long f = 0; f < w.size(); ++f) order[f] = f;
  std::stable_sort(order.begin(), order.end(), [&](long long a, long long b) {
    return w.values[a] > w.values[b];
  });

  Assignment best;
  best.value = -kInf;
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * r);
    auto rows = greedy_rows(w, order, strides, d, r == 0 ? nullptr : &rng);
    local_search(w, rows);
    rows = sorted_rows(std::move(rows));
    double val = assignment_value(w, rows);
    if (val > best.value + 1e-15 ||
        (std::abs(val - best.value) <= 1e-15 && rows < best.rows)) {
      best.rows = std::move(rows);
      best.value = val;
    }
  }
  return best;
}

}  // namespace sicsep
