// Copyright 2026 The qsep authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsep/qmat.hpp"

namespace qsep {

/// 3x3 bound entangled state built from the five-vector "tiles" unextendible
/// product basis: rho = (I_9 - sum_k |xi_k><xi_k|) / 4. PPT across the cut,
/// rank 4, purity 1/4.
DensityMatrix tiles_state();

/// Three-qubit bound entangled state built from the four-vector "shifts"
/// unextendible product basis (|0,1,+>, |1,+,0>, |+,0,1>, |-,-,->):
/// rho = (I_8 - sum_k |phi_k><phi_k|) / 4. Biseparable under every bipartite
/// cut, rank 4, purity 1/4.
DensityMatrix shifts_state();

/// Pure three-qubit state (|000> + eps|110> + |111>) / sqrt(2 + eps^2);
/// eps = 0 gives the GHZ state.
DensityMatrix perturbed_ghz(double epsilon);

/// White-noise mixture (1-p)/d * I + p * base, p in [0, 1].
DensityMatrix noise_mix(const DensityMatrix& base, double p);

/// rho = A A^dag / Tr(A A^dag) with A a d x rank matrix of independent
/// standard complex Gaussians; deterministic per seed.
DensityMatrix random_density(int dim, int rank, std::uint64_t seed,
                             std::vector<int> dims = {});

/// Convex mixture of `terms` random pure product states with normalized
/// exponential weights; deterministic per seed.
DensityMatrix random_separable(const std::vector<int>& dims, int terms,
                               std::uint64_t seed);

/// One-parameter white-noise family around a base state.
struct NoiseFamily {
  std::string label;
  DensityMatrix base;

  DensityMatrix at(double p) const { return noise_mix(base, p); }
};

NoiseFamily tiles_family();
NoiseFamily shifts_family();
NoiseFamily ghz_family(double epsilon);

}  // namespace qsep
