#pragma once

// Internal helpers for the POVM/state JSON file formats. Writing uses
// %.17g so values survive a text round trip; parsing goes through
// nlohmann::json.

#include <cstdio>
#include <string>

#include "sicsep/matcore.hpp"

#include "json.hpp"

namespace sicsep::jsonio {

inline std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// row-major flat array of [re, im] pairs
inline std::string matrix_to_json(const Matrix& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != 0 || j != 0) out += ",";
      out += "[" + fmt_double(m(i, j).real()) + "," +
             fmt_double(m(i, j).imag()) + "]";
    }
  out += "]";
  return out;
}

inline Matrix matrix_from_json(const nlohmann::json& arr, int side) {
  if (!arr.is_array() ||
      arr.size() != static_cast<size_t>(side) * static_cast<size_t>(side))
    throw ValidationError("matrix entry count does not match side " +
                          std::to_string(side));
  Matrix m(side, side);
  size_t idx = 0;
  for (Eigen::Index i = 0; i < side; ++i)
    for (Eigen::Index j = 0; j < side; ++j, ++idx) {
      const auto& e = arr[idx];
      if (!e.is_array() || e.size() != 2)
        throw ValidationError("matrix entries must be [re, im] pairs");
      m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  return m;
}

}  // namespace sicsep::jsonio
