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

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsep/criteria.hpp"
#include "qsep/states.hpp"

namespace qsep {

using Detector = std::function<CriterionResult(const DensityMatrix&)>;

struct GridSample {
  double p = 0.0;
  double margin = 0.0;
};

enum class ThresholdStatus {
  Threshold,       // exactly one sign change; p_star holds the boundary
  AlwaysDetected,  // margin already positive at p = 0
  NeverDetected,   // margin never positive on the grid
  Ambiguous,       // multiple sign changes; no p_star is claimed
};

std::string to_string(ThresholdStatus status);

/// Outcome of a noise-threshold search: the coarse grid evidence, the number
/// of margin sign changes, and (when the sign pattern is unambiguous) the
/// bisected boundary p_star.
struct ThresholdReport {
  std::string family;
  std::string criterion;
  std::optional<CriterionParams> params;
  std::optional<std::pair<int, int>> pair;
  std::optional<int> cut;
  ThresholdStatus status = ThresholdStatus::NeverDetected;
  std::optional<double> p_star;
  double bisect_tol = 1e-7;
  int transitions = 0;
  std::vector<GridSample> grid;
};

/// Scans margin(p) on a uniform grid over [0, 1]; when the sign pattern
/// shows exactly one non-positive -> positive transition, bisects the
/// bracketing interval down to bisect_tol and reports the midpoint.
/// Multiple sign changes are reported as Ambiguous with no p_star.
ThresholdReport find_threshold(const NoiseFamily& family,
                               const Detector& detector,
                               double bisect_tol = 1e-7,
                               int grid_points = 201);

/// One comparison row: a computed threshold next to the bundled reference
/// value. Rows whose reference criterion is not implemented here carry the
/// reference value only and are marked external.
struct TableRow {
  std::string family;
  std::string criterion;
  std::optional<double> alpha;
  std::optional<int> ell;
  std::optional<std::pair<int, int>> pair;
  std::optional<double> p_star;
  std::string p_star_label;  // "none", "all", "ambiguous", "external"
  std::optional<double> published;
  std::string published_label;  // used when the reference is non-numeric
  std::optional<double> delta;  // p_star - published
  bool external = false;
};

struct TableReport {
  std::string name;
  std::vector<TableRow> rows;
};

/// 12 thresholds of the shifts noise family under the augmented pair map on
/// (B, C) with the scaled-identity G, over alpha in {1, 10, 100} and ell in
/// {1, 10, 100, 500}.
TableReport reproduce_table1(double bisect_tol = 1e-7);

/// Perturbed-GHZ noise family over eps in {0, 1e-5, 1e-3, 1e-1, 1}: computed
/// hr and thm31 (alpha = ell = 10) thresholds on (B, C), plus the external
/// correlation-tensor (mt) and covariance-matrix (mc) reference columns,
/// which are echoed, not computed.
TableReport reproduce_table2(double bisect_tol = 1e-7);

/// Tiles noise family: ccnr, zr, and the two scaled-identity parameter
/// choices (ell = 12, alpha = 3.4640) and (ell = 1, alpha = 11.6590).
TableReport reproduce_example21(double bisect_tol = 1e-7);

/// Dispatch on "table1" | "table2" | "example21".
TableReport reproduce(const std::string& which, double bisect_tol = 1e-7);

// CSV column order: family, criterion, alpha, ell, pair, p_star, published,
// delta. p_star is printed with 6 decimals.
void write_csv(const TableReport& report, std::ostream& os);
void write_csv(const ThresholdReport& report, std::ostream& os);

nlohmann::json to_json(const ThresholdReport& report);
nlohmann::json to_json(const TableReport& report);
nlohmann::json to_json(const CriterionResult& result);

}  // namespace qsep
