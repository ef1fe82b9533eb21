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

#include <optional>
#include <string>
#include <utility>

#include "qsep/qmat.hpp"
#include "qsep/realign.hpp"

namespace qsep {

/// Uniform verdict object for every detector: a computed norm (or
/// eigenvalue-based) value, the separability bound it is compared against,
/// and the resulting margin. A state is flagged entangled when
/// margin > detect_tol.
struct CriterionResult {
  std::string criterion;  // "ccnr", "zr", "ppt", "thm21", "hr", "thm31"
  double norm_value = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool detected = false;
  double detect_tol = tol::kDetect;
  std::optional<CriterionParams> params;
  std::optional<std::pair<int, int>> pair;
  std::optional<int> cut;
};

/// ||realign(rho)||_tr <= 1 for separable states; bipartite view at the
/// contiguous cut (first `cut` subsystems on side A).
CriterionResult ccnr(const DensityMatrix& rho, int cut = 1,
                     double detect_tol = tol::kDetect);

/// Augmented-realignment criterion ("thm21"):
/// ||build_augmented(rho)||_tr <= 1 + Tr(G) for separable states, for any
/// Hermitian G with G - alpha^2*(all-ones) PSD. Throws when the G condition
/// fails, naming the offending eigenvalue.
CriterionResult augmented(const DensityMatrix& rho,
                          const CriterionParams& params, int cut = 1,
                          double detect_tol = tol::kDetect,
                          NormRoute route = NormRoute::Auto);

/// Realignment of rho - rho_A (x) rho_B against the purity-based bound
/// sqrt((1 - Tr(rho_A^2)) * (1 - Tr(rho_B^2))).
CriterionResult zr(const DensityMatrix& rho, int cut = 1,
                   double detect_tol = tol::kDetect);

/// Positive-partial-transpose test; norm_value is minus the smallest
/// eigenvalue of the partial transpose (signed, so it stays a continuous
/// margin), bound 0.
CriterionResult ppt(const DensityMatrix& rho, int cut = 1,
                    double detect_tol = tol::kDetect);

/// Pair-map criterion on an n-partite state: the chosen per-block map is
/// applied to subsystems (pair.first, pair.second) and the trace norm is
/// compared against 1. Realign kind is the "hr" criterion; Augmented kind
/// ("thm31") is pre-normalized by 1 + Tr(G).
CriterionResult multipartite_eval(const DensityMatrix& rho,
                                  std::pair<int, int> pair,
                                  const PairMapKind& kind,
                                  double detect_tol = tol::kDetect,
                                  NormRoute route = NormRoute::Auto);

}  // namespace qsep
