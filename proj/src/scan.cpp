#include "sicsep/scan.hpp"

#include <cstdio>

#include "sicsep/criteria.hpp"
#include "sicsep/sicpovm.hpp"
#include "sicsep/states.hpp"

namespace sicsep {

std::vector<ScanRow> scan_isotropic(int d, double p_start, double p_end,
                                    int steps, std::optional<double> a) {
  if (!(p_start >= 0.0 && p_start < p_end && p_end <= 1.0))
    throw Error("scan_isotropic: need 0 <= p_start < p_end <= 1");
  if (steps < 2) throw Error("scan_isotropic: need at least 2 grid points");

  GeneralSicPovm pa = a ? build_from_a(d, *a) : build_from_t(d, max_t(d));
  GeneralSicPovm pb = conjugate(pa);
  const double b1 = bound_thm1(d, pa.a, d, pb.a);
  const double b2 = bound_thm2(d, pa.a, d, pb.a);

  std::vector<ScanRow> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    double p = p_start + (p_end - p_start) * i / (steps - 1);
    auto [j, assignment] = j_bipartite(isotropic(d, p), pa, pb);
    (void)assignment;
    rows.push_back({p, j, b1, b2, j > b1 + 1e-12, j > b2 + 1e-12});
  }
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "p,j,bound_t1,bound_t2,detected_t1,detected_t2\n";
  char buf[160];
  for (const ScanRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%s,%s\n", r.p,
                  r.j, r.bound_t1, r.bound_t2,
                  r.detected_t1 ? "true" : "false",
                  r.detected_t2 ? "true" : "false");
    out << buf;
  }
}

}  // namespace sicsep
