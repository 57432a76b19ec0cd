#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sicsep/matcore.hpp"

namespace sicsep {

/// Seeded generator with portable output: uniforms are mt19937_64 draws
/// mapped to [0,1) and Gaussians come from Box-Muller, so the same seed
/// reproduces the same state on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

  double gaussian();

  Complex complex_gaussian() { return {gaussian(), gaussian()}; }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

DensityMatrix maximally_entangled(int d);

/// (1-p) I/d^2 + p |Phi+><Phi+|.
DensityMatrix isotropic(int d, double p);

/// (1-p) I/d^m + p |GHZ><GHZ| on m parties of local dimension d.
DensityMatrix ghz_with_noise(int m, int d, double p);

/// Convex mixture of `terms` Haar-random pure product states with
/// Dirichlet-uniform weights.
DensityMatrix random_separable(const std::vector<int>& dims, int terms,
                               std::uint64_t seed);

/// Ginibre construction G G^dagger / Tr of the given rank.
DensityMatrix random_density(const std::vector<int>& dims, int rank,
                             std::uint64_t seed);

void save_state(const DensityMatrix& rho, const std::string& path,
                const std::optional<std::string>& label = std::nullopt);
DensityMatrix load_state(const std::string& path);

}  // namespace sicsep
