#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "sicsep/matcore.hpp"

namespace sicsep {

struct ScanRow {
  double p;
  double j;
  double bound_t1;
  double bound_t2;
  bool detected_t1;
  bool detected_t2;
};

/// Evaluates the bipartite criteria on the isotropic family over a
/// uniform noise grid (endpoints included), conjugate POVM pairing.
/// The POVM uses parameter a when given, max-t otherwise.
std::vector<ScanRow> scan_isotropic(int d, double p_start, double p_end,
                                    int steps,
                                    std::optional<double> a = std::nullopt);

/// CSV with header "p,j,bound_t1,bound_t2,detected_t1,detected_t2".
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

}  // namespace sicsep
