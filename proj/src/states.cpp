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

#include "qsep/states.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qsep {

namespace {

CVector basis3(int i) {
  CVector v = CVector::Zero(3);
  v(i) = 1.0;
  return v;
}

CVector kron_vec(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

CMatrix projector_complement_quarter(const std::vector<CVector>& kets,
                                     Eigen::Index dim) {
  CMatrix sum = CMatrix::Zero(dim, dim);
  for (const auto& k : kets) sum += k * k.adjoint();
  return (CMatrix::Identity(dim, dim) - sum) / 4.0;
}

Complex gaussian(std::mt19937_64& rng, std::normal_distribution<double>& nd) {
  const double re = nd(rng);
  const double im = nd(rng);
  return Complex(re, im);
}

CVector random_pure_ket(int dim, std::mt19937_64& rng,
                        std::normal_distribution<double>& nd) {
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = gaussian(rng, nd);
  const double norm = v.norm();
  if (norm == 0.0) {
    v(0) = 1.0;  // astronomically unlikely; keep the sampler total
    return v;
  }
  return v / norm;
}

}  // namespace

DensityMatrix tiles_state() {
  const double s = 1.0 / std::sqrt(2.0);
  const CVector e0 = basis3(0), e1 = basis3(1), e2 = basis3(2);
  const CVector d01 = s * (e0 - e1);
  const CVector d12 = s * (e1 - e2);
  const CVector uni = (e0 + e1 + e2) / std::sqrt(3.0);
  const std::vector<CVector> kets = {
      kron_vec(e0, d01), kron_vec(d01, e2), kron_vec(e2, d12),
      kron_vec(d12, e0), kron_vec(uni, uni)};
  return make_density(projector_complement_quarter(kets, 9), {3, 3});
}

DensityMatrix shifts_state() {
  const double s = 1.0 / std::sqrt(2.0);
  CVector q0 = CVector::Zero(2), q1 = CVector::Zero(2);
  q0(0) = 1.0;
  q1(1) = 1.0;
  const CVector plus = s * (q0 + q1);
  const CVector minus = s * (q0 - q1);
  const std::vector<CVector> kets = {
      kron_vec(q0, kron_vec(q1, plus)), kron_vec(q1, kron_vec(plus, q0)),
      kron_vec(plus, kron_vec(q0, q1)),
      kron_vec(minus, kron_vec(minus, minus))};
  return make_density(projector_complement_quarter(kets, 8), {2, 2, 2});
}

DensityMatrix perturbed_ghz(double epsilon) {
  if (!std::isfinite(epsilon)) {
    throw std::invalid_argument("perturbed_ghz: epsilon must be finite");
  }
  CVector psi = CVector::Zero(8);
  psi(0) = 1.0;  // |000>
  psi(6) = epsilon;  // |110>
  psi(7) = 1.0;  // |111>
  psi /= std::sqrt(2.0 + epsilon * epsilon);
  return make_density(psi * psi.adjoint(), {2, 2, 2});
}

DensityMatrix noise_mix(const DensityMatrix& base, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "noise_mix: p must be in [0, 1], got " << p;
    throw std::invalid_argument(os.str());
  }
  const Eigen::Index d = base.dim();
  CMatrix mixed =
      (1.0 - p) / static_cast<double>(d) * CMatrix::Identity(d, d) +
      p * base.mat;
  return make_density(std::move(mixed), base.dims);
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed,
                             std::vector<int> dims) {
  if (dim < 1) throw std::invalid_argument("random_density: dim must be >= 1");
  if (rank < 1 || rank > dim) {
    throw std::invalid_argument(
        "random_density: rank must satisfy 1 <= rank <= dim");
  }
  if (dims.empty()) dims = {dim};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  CMatrix a(dim, rank);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < rank; ++j) a(i, j) = gaussian(rng, nd);
  CMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return make_density(std::move(rho), std::move(dims));
}

DensityMatrix random_separable(const std::vector<int>& dims, int terms,
                               std::uint64_t seed) {
  if (terms < 1) {
    throw std::invalid_argument("random_separable: terms must be >= 1");
  }
  Eigen::Index d = 1;
  for (int s : dims) d *= s;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> ud(0.0, 1.0);

  // Exponential weights normalized to 1 (uniform Dirichlet).
  std::vector<double> w(terms);
  double total = 0.0;
  for (int t = 0; t < terms; ++t) {
    w[t] = -std::log(1.0 - ud(rng));
    total += w[t];
  }

  CMatrix rho = CMatrix::Zero(d, d);
  for (int t = 0; t < terms; ++t) {
    CVector ket = CVector::Ones(1);
    for (int s : dims) ket = kron_vec(ket, random_pure_ket(s, rng, nd));
    rho += (w[t] / total) * (ket * ket.adjoint());
  }
  return make_density(std::move(rho), dims);
}

NoiseFamily tiles_family() { return NoiseFamily{"tiles", tiles_state()}; }

NoiseFamily shifts_family() { return NoiseFamily{"shifts", shifts_state()}; }

NoiseFamily ghz_family(double epsilon) {
  std::ostringstream os;
  os << "ghz(eps=" << epsilon << ")";
  return NoiseFamily{os.str(), perturbed_ghz(epsilon)};
}

}  // namespace qsep
