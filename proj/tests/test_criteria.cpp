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

#include <doctest.h>

#include "qsep/criteria.hpp"
#include "qsep/states.hpp"
#include "test_support.hpp"

using namespace qsep;
using testsup::Rng;

namespace {

DensityMatrix bell() {
  CVector v = CVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return make_density(v * v.adjoint(), {2, 2});
}

}  // namespace

TEST_SUITE_BEGIN("criteria");

TEST_CASE("ccnr detects the Bell state and passes product states") {
  const CriterionResult res = ccnr(bell());
  CHECK(res.criterion == "ccnr");
  CHECK(res.norm_value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(res.bound == 1.0);
  CHECK(res.margin == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.detected);

  Rng rng(51);
  const DensityMatrix prod =
      make_density(testsup::random_pure_product({2, 3}, rng), {2, 3});
  const CriterionResult p = ccnr(prod);
  CHECK(p.norm_value <= 1.0 + 1e-12);
  CHECK(!p.detected);
}

TEST_CASE("ccnr works at a cut of a tripartite state") {
  Rng rng(52);
  const DensityMatrix rho =
      make_density(testsup::random_mixed(8, rng), {2, 2, 2});
  const CriterionResult at1 = ccnr(rho, 1);
  const CriterionResult at2 = ccnr(rho, 2);
  CHECK(at1.cut == 1);
  CHECK(at2.cut == 2);
  CHECK_THROWS_AS(ccnr(rho, 3), std::invalid_argument);
}

TEST_CASE("augmented with alpha = 0 matches ccnr") {
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho =
        make_density(testsup::random_mixed(9, rng), {3, 3});
    const CriterionResult base = ccnr(rho);
    const CriterionResult aug =
        augmented(rho, CriterionParams::scaled_identity(0.0, 5));
    CHECK(std::abs(aug.margin - base.margin) < 1e-10);
  }
}

TEST_CASE("augmented bounds follow the preset traces") {
  Rng rng(54);
  const DensityMatrix rho =
      make_density(testsup::random_mixed(4, rng), {2, 2});

  const CriterionResult c21 =
      augmented(rho, CriterionParams::scaled_identity(1.0, 2));
  CHECK(c21.bound == doctest::Approx(5.0));  // 1 + ell^2 alpha^2

  const CriterionResult c22 =
      augmented(rho, CriterionParams::scaled_ones(1.0, 2));
  CHECK(c22.bound == doctest::Approx(3.0));  // 1 + ell alpha^2

  const CriterionResult big =
      augmented(rho, CriterionParams::scaled_identity(3.4640, 12));
  CHECK(big.bound == doctest::Approx(1.0 + 144.0 * 3.4640 * 3.4640));
  CHECK(big.criterion == "thm21");
  REQUIRE(big.params.has_value());
  CHECK(big.params->ell == 12);
}

TEST_CASE("augmented rejects an invalid G") {
  const CriterionParams bad =
      CriterionParams::explicit_g(CMatrix::Zero(1, 1), 1.0);
  CHECK_THROWS_WITH_AS(augmented(bell(), bad),
                       doctest::Contains("eigenvalue"),
                       std::invalid_argument);
}

TEST_CASE("zr on product and maximally mixed states") {
  Rng rng(55);
  const DensityMatrix prod =
      make_density(testsup::random_pure_product({3, 3}, rng), {3, 3});
  const CriterionResult p = zr(prod);
  CHECK(p.norm_value < 1e-12);
  CHECK(p.bound < 1e-12);
  CHECK(!p.detected);

  const DensityMatrix mixed =
      make_density(CMatrix::Identity(9, 9) / 9.0, {3, 3});
  const CriterionResult m = zr(mixed);
  CHECK(m.norm_value < 1e-12);
  CHECK(!m.detected);
}

TEST_CASE("zr bound stays inside [0, 1)") {
  Rng rng(56);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho =
        make_density(testsup::random_mixed(6, rng), {2, 3});
    const CriterionResult res = zr(rho);
    CHECK(res.bound >= 0.0);
    CHECK(res.bound < 1.0);
    CHECK(res.norm_value >= 0.0);
  }
}

TEST_CASE("ppt margins") {
  const CriterionResult b = ppt(bell());
  CHECK(b.margin == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(b.detected);

  const CriterionResult tiles = ppt(tiles_state());
  CHECK(!tiles.detected);  // bound entangled: PPT by construction

  Rng rng(57);
  const DensityMatrix sep = random_separable({2, 2}, 20, 571);
  CHECK(!ppt(sep).detected);
}

TEST_CASE("multipartite_eval reduces to the bipartite detectors for n = 2") {
  Rng rng(58);
  const DensityMatrix rho =
      make_density(testsup::random_mixed(9, rng), {3, 3});

  const CriterionResult hr =
      multipartite_eval(rho, {0, 1}, PairMapKind::realign_map());
  CHECK(hr.criterion == "hr");
  CHECK(std::abs(hr.norm_value - ccnr(rho).norm_value) < 1e-10);
  CHECK(hr.bound == 1.0);

  const CriterionParams params = CriterionParams::scaled_identity(1.2, 3);
  const CriterionResult t31 =
      multipartite_eval(rho, {0, 1}, PairMapKind::augmented(params));
  const CriterionResult t21 = augmented(rho, params);
  CHECK(t31.criterion == "thm31");
  CHECK(std::abs(t31.norm_value * (1.0 + params.g.trace()) - t21.norm_value) <
        1e-9);
}

TEST_CASE("pair map detects the noisy shifts state at p = 0.9") {
  const DensityMatrix rho = noise_mix(shifts_state(), 0.9);
  const CriterionParams params = CriterionParams::scaled_identity(10.0, 10);
  CHECK(multipartite_eval(rho, {1, 2}, PairMapKind::augmented(params))
            .detected);
  CHECK(multipartite_eval(rho, {1, 2}, PairMapKind::realign_map()).detected);
}

TEST_CASE("augmented is at least as strong as ccnr") {
  // Wherever ccnr fires, the augmented criterion with any valid G fires too.
  const NoiseFamily family = tiles_family();
  Rng rng(59);
  for (double p : {0.90, 0.95, 1.0}) {
    const DensityMatrix rho = family.at(p);
    REQUIRE(ccnr(rho).detected);
    for (int sel = 0; sel < 3; ++sel) {
      const CriterionParams params = testsup::random_valid_params(rng, sel);
      CHECK(augmented(rho, params).detected);
    }
  }
  REQUIRE(ccnr(bell()).detected);
  CHECK(augmented(bell(), CriterionParams::scaled_ones(2.0, 4)).detected);
}

TEST_CASE("no detector fires on separable samples") {
  for (int i = 0; i < 60; ++i) {
    const std::vector<int> dims =
        i % 3 == 0 ? std::vector<int>{2, 2}
                   : (i % 3 == 1 ? std::vector<int>{3, 3}
                                 : std::vector<int>{2, 2, 2});
    const DensityMatrix rho = random_separable(dims, 1 + i % 25, 600 + i);
    CHECK(!ccnr(rho).detected);
    CHECK(!zr(rho).detected);
    CHECK(!ppt(rho).detected);
    CHECK(!augmented(rho, CriterionParams::scaled_identity(1.0, 2)).detected);
    if (dims.size() == 3) {
      CHECK(!multipartite_eval(rho, {1, 2}, PairMapKind::realign_map())
                 .detected);
      CHECK(!multipartite_eval(
                 rho, {1, 2},
                 PairMapKind::augmented(CriterionParams::scaled_identity(
                     10.0, 10)))
                 .detected);
    }
  }
}

TEST_SUITE_END();
