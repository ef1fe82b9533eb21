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

#include "qsep/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsep {

namespace {

CriterionResult make_result(std::string criterion, double norm_value,
                            double bound, double detect_tol) {
  CriterionResult r;
  r.criterion = std::move(criterion);
  r.norm_value = norm_value;
  r.bound = bound;
  r.margin = norm_value - bound;
  r.detect_tol = detect_tol;
  r.detected = r.margin > detect_tol;
  return r;
}

}  // namespace

CriterionResult ccnr(const DensityMatrix& rho, int cut, double detect_tol) {
  const auto [da, db] = bipartition_at(rho.dims, cut);
  const double norm = trace_norm(realign(rho.mat, da, db));
  CriterionResult r = make_result("ccnr", norm, 1.0, detect_tol);
  r.cut = cut;
  return r;
}

CriterionResult augmented(const DensityMatrix& rho,
                          const CriterionParams& params, int cut,
                          double detect_tol, NormRoute route) {
  const GConditionReport cond = check_g_condition(params.g);
  if (!cond.ok) {
    std::ostringstream os;
    os << "augmented criterion: hypothesis G - alpha^2 * (all-ones) >= 0 "
          "fails, min eigenvalue "
       << cond.min_eigenvalue;
    throw std::invalid_argument(os.str());
  }
  const auto [da, db] = bipartition_at(rho.dims, cut);
  const double norm = augmented_trace_norm(rho.mat, da, db, params, route);
  CriterionResult r =
      make_result("thm21", norm, 1.0 + params.g.trace(), detect_tol);
  r.params = params;
  r.cut = cut;
  return r;
}

CriterionResult zr(const DensityMatrix& rho, int cut, double detect_tol) {
  const auto [da, db] = bipartition_at(rho.dims, cut);
  const CMatrix ra = partial_trace(rho.mat, da, db, Side::A);
  const CMatrix rb = partial_trace(rho.mat, da, db, Side::B);
  const double norm = trace_norm(realign(rho.mat - kron(ra, rb), da, db));
  const double bound = std::sqrt(std::max(0.0, 1.0 - purity(ra)) *
                                 std::max(0.0, 1.0 - purity(rb)));
  CriterionResult r = make_result("zr", norm, bound, detect_tol);
  r.cut = cut;
  return r;
}

CriterionResult ppt(const DensityMatrix& rho, int cut, double detect_tol) {
  // An eigenvalue inside the solver's roundoff band is an exact zero; snap
  // it so states sitting on the PPT boundary (the bound entangled families)
  // report a margin of exactly 0 rather than +-1e-16 noise.
  constexpr double kEigenvalueSnap = 1e-12;
  const auto [da, db] = bipartition_at(rho.dims, cut);
  double lam = min_eigenvalue(partial_transpose(rho.mat, da, db, Side::B));
  if (std::abs(lam) < kEigenvalueSnap) lam = 0.0;
  CriterionResult r = make_result("ppt", -lam, 0.0, detect_tol);
  r.cut = cut;
  return r;
}

CriterionResult multipartite_eval(const DensityMatrix& rho,
                                  std::pair<int, int> pair,
                                  const PairMapKind& kind, double detect_tol,
                                  NormRoute route) {
  const double norm = pair_map_trace_norm(rho.mat, rho.dims, pair, kind,
                                          route);
  const bool is_realign = kind.kind == PairMapKind::Kind::Realign;
  CriterionResult r =
      make_result(is_realign ? "hr" : "thm31", norm, 1.0, detect_tol);
  r.pair = pair;
  if (!is_realign) r.params = kind.params;
  return r;
}

}  // namespace qsep
