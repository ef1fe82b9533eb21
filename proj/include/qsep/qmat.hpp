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

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qsep {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

namespace tol {
inline constexpr double kHermitian = 1e-10;    // max |m - m^dag| entry
inline constexpr double kTrace = 1e-10;        // |Tr - 1|
inline constexpr double kPsd = 1e-9;           // min eigenvalue >= -kPsd
inline constexpr double kGHermitian = 1e-12;   // Hermiticity of a G matrix
inline constexpr double kGCondition = 1e-10;   // min eigenvalue of G - a^2 E
inline constexpr double kDetect = 1e-9;        // detection margin threshold
}  // namespace tol

// Which factor of a bipartite tensor space an operation refers to.
enum class Side { A, B };

/// Square complex matrix together with an ordered list of subsystem
/// dimensions (leftmost tensor factor first).
struct DensityMatrix {
  CMatrix mat;
  std::vector<int> dims;

  Eigen::Index dim() const { return mat.rows(); }
  int subsystems() const { return static_cast<int>(dims.size()); }
};

struct InvariantViolation {
  std::string name;    // "dims", "finite", "hermitian", "trace", "psd"
  double magnitude;    // measured size of the violation
  double limit;        // tolerance it was checked against
};

struct ValidationReport {
  std::vector<InvariantViolation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks the density-matrix invariants (dims product, finite entries,
/// Hermiticity, unit trace, positive semidefiniteness) and reports every
/// violation with its measured magnitude.
ValidationReport validate_density(const CMatrix& mat,
                                  const std::vector<int>& dims);

/// Builds a DensityMatrix, throwing std::invalid_argument with the full
/// violation list when validate_density fails.
DensityMatrix make_density(CMatrix mat, std::vector<int> dims);

/// Wraps a matrix without checking the state invariants. The dims product
/// must still match the matrix dimension.
DensityMatrix make_density_unchecked(CMatrix mat, std::vector<int> dims);

// --- primitives -----------------------------------------------------------

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Column-major stacking: vec(X) = (x_00,...,x_{m-1,0}, x_01,...)^T.
CVector vec(const CMatrix& x);

/// Sum of singular values. Throws on non-finite entries.
double trace_norm(const CMatrix& x);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMatrix& hermitian);

/// Traces out one factor of a bipartite matrix of dimension dim_a*dim_b.
/// Hermiticity is not required; the input may be any square matrix.
CMatrix partial_trace(const CMatrix& x, int dim_a, int dim_b, Side keep);

/// Blockwise transpose of one factor of a bipartite matrix.
CMatrix partial_transpose(const CMatrix& x, int dim_a, int dim_b, Side side);

/// Subsystem reordering: output factor slot t holds input subsystem
/// order[t]; dims are reordered accordingly.
DensityMatrix permute_systems(const DensityMatrix& rho,
                              const std::vector<int>& order);

/// Basis-index relabeling for the reordering `order` (output slot t holds
/// input subsystem order[t]): map[input_index] = output_index.
std::vector<Eigen::Index> permutation_index_map(const std::vector<int>& dims,
                                                const std::vector<int>& order);

/// Tr(rho^2), assuming Hermitian input.
double purity(const CMatrix& m);
double purity(const DensityMatrix& rho);

/// Dimensions of the two sides of the contiguous bipartition that puts the
/// first `cut` subsystems on side A, 1 <= cut <= n-1.
std::pair<int, int> bipartition_at(const std::vector<int>& dims, int cut);

}  // namespace qsep
