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
#include <utility>
#include <vector>

#include "qsep/qmat.hpp"

namespace qsep {

inline constexpr int kMaxEll = 10000;
inline constexpr int kDefaultDimCap = 4096;

enum class GKind { ScaledIdentity, ScaledOnes, Explicit };

/// Parameterized Hermitian matrix used by the augmented-realignment
/// criteria, together with the replication count ell and weight alpha.
/// ScaledIdentity materializes to ell*alpha^2*I, ScaledOnes to
/// alpha^2*(all-ones).
struct GSpec {
  GKind kind = GKind::ScaledIdentity;
  int ell = 1;
  double alpha = 0.0;
  CMatrix explicit_mat;  // Explicit only; ell x ell Hermitian

  static GSpec scaled_identity(double alpha, int ell);
  static GSpec scaled_ones(double alpha, int ell);
  static GSpec explicit_matrix(CMatrix g, double alpha);

  CMatrix materialize() const;
  double trace() const;
};

/// (alpha, ell, G) bundle; alpha and ell always match the GSpec fields.
struct CriterionParams {
  double alpha = 0.0;
  int ell = 1;
  GSpec g;

  static CriterionParams scaled_identity(double alpha, int ell);
  static CriterionParams scaled_ones(double alpha, int ell);
  static CriterionParams explicit_g(CMatrix g, double alpha);
};

struct GConditionReport {
  bool ok = false;
  double min_eigenvalue = 0.0;
};

/// Checks the criterion hypothesis that G - alpha^2*(all-ones) is positive
/// semidefinite (min eigenvalue >= -1e-10). Closed-form for the two preset
/// families, numeric for explicit matrices.
GConditionReport check_g_condition(const GSpec& g);

/// Selects the per-block map applied to a chosen pair of subsystems:
/// the plain realignment, or the normalized augmented map.
struct PairMapKind {
  enum class Kind { Realign, Augmented };
  Kind kind = Kind::Realign;
  std::optional<CriterionParams> params;

  static PairMapKind realign_map() { return {Kind::Realign, std::nullopt}; }
  static PairMapKind augmented(CriterionParams p) {
    return {Kind::Augmented, std::move(p)};
  }
};

// --- operations ------------------------------------------------------------

/// Realignment of a dim_a*dim_b square matrix viewed as a dim_a x dim_a grid
/// of dim_b x dim_b blocks: row (j*dim_a + i) of the output is vec(Y_ij)^T.
/// Output is dim_a^2 x dim_b^2 and satisfies
/// realign(kron(A, B)) = vec(A) * vec(B)^T.
CMatrix realign(const CMatrix& y, int dim_a, int dim_b);

/// Inverse index map of realign; realign_inverse(realign(y)) == y exactly.
CMatrix realign_inverse(const CMatrix& r, int dim_a, int dim_b);

/// vec(x) repeated ell times side by side.
CMatrix omega(const CMatrix& x, int ell);

/// The augmented block matrix
///   [ Tr(x)*G          alpha*omega(x_B)^T ]
///   [ alpha*omega(x_A) realign(x)         ]
/// of shape (ell + dim_a^2) x (ell + dim_b^2). The input need not be
/// Hermitian or unit trace; no normalization is applied. Transposes are
/// plain (not conjugated).
CMatrix build_augmented(const CMatrix& x, int dim_a, int dim_b,
                        const CriterionParams& params,
                        int dim_cap = kDefaultDimCap);

/// Applies the selected per-block map to subsystems (pair.first, pair.second)
/// of an n-partite matrix, leaving the rest untouched:
/// the input is reordered to (a, b, rest in original relative order),
/// decomposed into blocks sigma_kl over the untouched indices, each block is
/// mapped (realign, or build_augmented/(1+Tr G)), and the results are
/// reassembled so that Out[x*D+k, y*D+l] = m_kl[x, y].
CMatrix apply_pair_map(const CMatrix& mat, const std::vector<int>& dims,
                       std::pair<int, int> pair, const PairMapKind& kind,
                       int dim_cap = kDefaultDimCap);
CMatrix apply_pair_map(const DensityMatrix& rho, std::pair<int, int> pair,
                       const PairMapKind& kind, int dim_cap = kDefaultDimCap);

/// How trace norms of the augmented assemblies are evaluated. Auto uses an
/// exact block-diagonal reduction for the ScaledIdentity/ScaledOnes families
/// at large ell (rotating the replicated-column block splits off ell-1
/// trivial diagonal blocks), and the direct assembly otherwise. Both routes
/// compute the same value.
enum class NormRoute { Auto, Direct, Reduced };

/// trace_norm(build_augmented(x, ...)), without materializing the full
/// assembly when the reduced route applies.
double augmented_trace_norm(const CMatrix& x, int dim_a, int dim_b,
                            const CriterionParams& params,
                            NormRoute route = NormRoute::Auto);

/// trace_norm(apply_pair_map(mat, ...)), with the same reduced route for
/// Augmented kinds with preset G at large ell.
double pair_map_trace_norm(const CMatrix& mat, const std::vector<int>& dims,
                           std::pair<int, int> pair, const PairMapKind& kind,
                           NormRoute route = NormRoute::Auto);

}  // namespace qsep
