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

#include "qsep/sweep.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qsep {

namespace {

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

std::string pair_str(const std::pair<int, int>& p) {
  return std::to_string(p.first) + "-" + std::to_string(p.second);
}

std::string g_kind_str(GKind kind) {
  switch (kind) {
    case GKind::ScaledIdentity:
      return "identity";
    case GKind::ScaledOnes:
      return "ones";
    case GKind::Explicit:
      return "explicit";
  }
  return "?";
}

nlohmann::json params_json(const CriterionParams& p) {
  return nlohmann::json{
      {"alpha", p.alpha}, {"ell", p.ell}, {"g", g_kind_str(p.g.kind)}};
}

TableRow computed_row(const std::string& criterion,
                      const ThresholdReport& tr,
                      std::optional<double> published,
                      std::optional<double> alpha, std::optional<int> ell) {
  TableRow row;
  row.family = tr.family;
  row.criterion = criterion;
  row.alpha = alpha;
  row.ell = ell;
  row.pair = tr.pair;
  row.published = published;
  if (tr.status == ThresholdStatus::Threshold) {
    row.p_star = tr.p_star;
    if (published) row.delta = *tr.p_star - *published;
  } else if (tr.status == ThresholdStatus::NeverDetected) {
    row.p_star_label = "none";
  } else if (tr.status == ThresholdStatus::AlwaysDetected) {
    row.p_star_label = "all";
  } else {
    row.p_star_label = "ambiguous";
  }
  return row;
}

TableRow external_row(const std::string& family, const std::string& criterion,
                      std::optional<double> published,
                      const std::string& published_label) {
  TableRow row;
  row.family = family;
  row.criterion = criterion;
  row.p_star_label = "external";
  row.published = published;
  row.published_label = published_label;
  row.external = true;
  return row;
}

}  // namespace

std::string to_string(ThresholdStatus status) {
  switch (status) {
    case ThresholdStatus::Threshold:
      return "threshold";
    case ThresholdStatus::AlwaysDetected:
      return "always-detected";
    case ThresholdStatus::NeverDetected:
      return "never-detected";
    case ThresholdStatus::Ambiguous:
      return "ambiguous";
  }
  return "?";
}

ThresholdReport find_threshold(const NoiseFamily& family,
                               const Detector& detector, double bisect_tol,
                               int grid_points) {
  if (grid_points < 2) {
    throw std::invalid_argument("find_threshold: need at least 2 grid points");
  }
  if (!(bisect_tol > 0.0)) {
    throw std::invalid_argument("find_threshold: bisect_tol must be > 0");
  }

  ThresholdReport report;
  report.family = family.label;
  report.bisect_tol = bisect_tol;
  report.grid.reserve(grid_points);

  // Strict sign predicate. A fixed positive cutoff here would shift every
  // threshold by cutoff/slope, which is fatal for the normalized pair-map
  // margins whose slope scales like 1/(1 + Tr G); detectors whose margin can
  // sit exactly at zero are responsible for snapping their own roundoff.
  for (int i = 0; i < grid_points; ++i) {
    const double p = static_cast<double>(i) / (grid_points - 1);
    const CriterionResult res = detector(family.at(p));
    if (i == 0) {
      report.criterion = res.criterion;
      report.params = res.params;
      report.pair = res.pair;
      report.cut = res.cut;
    }
    report.grid.push_back({p, res.margin});
  }

  int up_index = -1;
  for (int i = 0; i + 1 < grid_points; ++i) {
    const bool lo = report.grid[i].margin > 0.0;
    const bool hi = report.grid[i + 1].margin > 0.0;
    if (lo != hi) {
      ++report.transitions;
      if (!lo && hi) up_index = i;
    }
  }

  if (report.grid.front().margin > 0.0) {
    report.status = report.transitions == 0 ? ThresholdStatus::AlwaysDetected
                                            : ThresholdStatus::Ambiguous;
    return report;
  }
  if (report.transitions == 0) {
    report.status = ThresholdStatus::NeverDetected;
    return report;
  }
  if (report.transitions > 1) {
    report.status = ThresholdStatus::Ambiguous;
    return report;
  }

  double lo = report.grid[up_index].p;
  double hi = report.grid[up_index + 1].p;
  while (hi - lo > bisect_tol) {
    const double mid = 0.5 * (lo + hi);
    if (detector(family.at(mid)).margin > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  report.status = ThresholdStatus::Threshold;
  report.p_star = 0.5 * (lo + hi);
  return report;
}

TableReport reproduce_table1(double bisect_tol) {
  static constexpr double kAlphas[3] = {1.0, 10.0, 100.0};
  static constexpr int kElls[4] = {1, 10, 100, 500};
  static constexpr double kPublished[3][4] = {
      {0.845476, 0.831017, 0.828701, 0.828483},
      {0.828701, 0.828455, 0.828430, 0.828428},
      {0.828430, 0.828428, 0.828428, 0.828427},
  };

  const NoiseFamily family = shifts_family();
  const std::pair<int, int> pair{1, 2};

  TableReport report;
  report.name = "table1";
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) {
      const CriterionParams params =
          CriterionParams::scaled_identity(kAlphas[r], kElls[c]);
      const Detector det = [&params, pair](const DensityMatrix& rho) {
        return multipartite_eval(rho, pair, PairMapKind::augmented(params));
      };
      const ThresholdReport tr = find_threshold(family, det, bisect_tol);
      report.rows.push_back(computed_row("thm31", tr, kPublished[r][c],
                                         kAlphas[r], kElls[c]));
    }
  }
  return report;
}

TableReport reproduce_table2(double bisect_tol) {
  static constexpr double kEps[5] = {0.0, 1e-5, 1e-3, 1e-1, 1.0};
  static constexpr double kHr[5] = {0.3344, 0.3344, 0.3344, 0.3340, 0.3899};
  static constexpr double kT31[5] = {0.3334, 0.3334, 0.3334, 0.3339, 0.3849};
  static constexpr double kMt[5] = {0.4118, 0.4118, 0.4118, 0.4118, 0.4256};
  // The covariance-matrix column detects nothing at eps = 0 and only the
  // p = 1 endpoint at eps = 1e-5.
  static const std::optional<double> kMc[5] = {std::nullopt, 1.0, 0.9981,
                                               0.8341, 0.4286};
  static const char* kMcLabel[5] = {"none", "p=1", "", "", ""};

  const std::pair<int, int> pair{1, 2};
  const CriterionParams params = CriterionParams::scaled_identity(10.0, 10);

  TableReport report;
  report.name = "table2";
  for (int i = 0; i < 5; ++i) {
    const NoiseFamily family = ghz_family(kEps[i]);

    const Detector hr_det = [pair](const DensityMatrix& rho) {
      return multipartite_eval(rho, pair, PairMapKind::realign_map());
    };
    report.rows.push_back(computed_row(
        "hr", find_threshold(family, hr_det, bisect_tol), kHr[i],
        std::nullopt, std::nullopt));

    const Detector t31_det = [&params, pair](const DensityMatrix& rho) {
      return multipartite_eval(rho, pair, PairMapKind::augmented(params));
    };
    TableRow t31 = computed_row(
        "thm31", find_threshold(family, t31_det, bisect_tol), kT31[i],
        params.alpha, params.ell);
    report.rows.push_back(std::move(t31));

    report.rows.push_back(external_row(family.label, "mt", kMt[i], ""));
    report.rows.push_back(
        external_row(family.label, "mc", kMc[i], kMcLabel[i]));
  }
  return report;
}

TableReport reproduce_example21(double bisect_tol) {
  const NoiseFamily family = tiles_family();

  TableReport report;
  report.name = "example21";

  const Detector ccnr_det = [](const DensityMatrix& rho) {
    return ccnr(rho);
  };
  report.rows.push_back(
      computed_row("ccnr", find_threshold(family, ccnr_det, bisect_tol),
                   0.8897, std::nullopt, std::nullopt));

  const Detector zr_det = [](const DensityMatrix& rho) { return zr(rho); };
  report.rows.push_back(
      computed_row("zr", find_threshold(family, zr_det, bisect_tol), 0.8822,
                   std::nullopt, std::nullopt));

  for (const auto& [alpha, ell] :
       std::vector<std::pair<double, int>>{{3.4640, 12}, {11.6590, 1}}) {
    const CriterionParams params =
        CriterionParams::scaled_identity(alpha, ell);
    const Detector det = [&params](const DensityMatrix& rho) {
      return augmented(rho, params);
    };
    report.rows.push_back(computed_row(
        "thm21", find_threshold(family, det, bisect_tol), 0.8822, alpha,
        ell));
  }
  return report;
}

TableReport reproduce(const std::string& which, double bisect_tol) {
  if (which == "table1") return reproduce_table1(bisect_tol);
  if (which == "table2") return reproduce_table2(bisect_tol);
  if (which == "example21") return reproduce_example21(bisect_tol);
  throw std::invalid_argument(
      "reproduce: expected table1, table2 or example21, got '" + which + "'");
}

void write_csv(const TableReport& report, std::ostream& os) {
  os << "family,criterion,alpha,ell,pair,p_star,published,delta\n";
  for (const TableRow& row : report.rows) {
    os << row.family << ',' << row.criterion << ',';
    if (row.alpha) os << fmt("%g", *row.alpha);
    os << ',';
    if (row.ell) os << *row.ell;
    os << ',';
    if (row.pair) os << pair_str(*row.pair);
    os << ',';
    os << (row.p_star ? fmt("%.6f", *row.p_star) : row.p_star_label);
    os << ',';
    if (row.published) {
      os << fmt("%.6f", *row.published);
    } else {
      os << row.published_label;
    }
    os << ',';
    if (row.delta) os << fmt("%.3e", *row.delta);
    os << '\n';
  }
}

void write_csv(const ThresholdReport& report, std::ostream& os) {
  os << "family,criterion,alpha,ell,pair,p_star,published,delta\n";
  os << report.family << ',' << report.criterion << ',';
  if (report.params) os << fmt("%g", report.params->alpha);
  os << ',';
  if (report.params) os << report.params->ell;
  os << ',';
  if (report.pair) os << pair_str(*report.pair);
  os << ',';
  if (report.status == ThresholdStatus::Threshold) {
    os << fmt("%.6f", *report.p_star);
  } else if (report.status == ThresholdStatus::NeverDetected) {
    os << "none";
  } else if (report.status == ThresholdStatus::AlwaysDetected) {
    os << "all";
  } else {
    os << "ambiguous";
  }
  os << ",,\n";
}

nlohmann::json to_json(const ThresholdReport& report) {
  nlohmann::json j;
  j["family"] = report.family;
  j["criterion"] = report.criterion;
  j["params"] =
      report.params ? params_json(*report.params) : nlohmann::json(nullptr);
  j["pair"] = report.pair ? nlohmann::json{report.pair->first,
                                           report.pair->second}
                          : nlohmann::json(nullptr);
  j["cut"] = report.cut ? nlohmann::json(*report.cut) : nlohmann::json(nullptr);
  j["status"] = to_string(report.status);
  j["p_star"] =
      report.p_star ? nlohmann::json(*report.p_star) : nlohmann::json(nullptr);
  j["bisect_tol"] = report.bisect_tol;
  j["transitions"] = report.transitions;
  nlohmann::json grid = nlohmann::json::array();
  for (const GridSample& g : report.grid) {
    grid.push_back({{"p", g.p}, {"margin", g.margin}});
  }
  j["grid"] = std::move(grid);
  return j;
}

nlohmann::json to_json(const TableReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TableRow& row : report.rows) {
    nlohmann::json j;
    j["family"] = row.family;
    j["criterion"] = row.criterion;
    j["alpha"] = row.alpha ? nlohmann::json(*row.alpha) : nullptr;
    j["ell"] = row.ell ? nlohmann::json(*row.ell) : nullptr;
    j["pair"] = row.pair
                    ? nlohmann::json{row.pair->first, row.pair->second}
                    : nlohmann::json(nullptr);
    j["p_star"] = row.p_star ? nlohmann::json(*row.p_star) : nullptr;
    if (!row.p_star_label.empty()) j["p_star_label"] = row.p_star_label;
    j["published"] = row.published ? nlohmann::json(*row.published) : nullptr;
    if (!row.published_label.empty())
      j["published_label"] = row.published_label;
    j["delta"] = row.delta ? nlohmann::json(*row.delta) : nullptr;
    j["external"] = row.external;
    rows.push_back(std::move(j));
  }
  return nlohmann::json{{"name", report.name}, {"rows", std::move(rows)}};
}

nlohmann::json to_json(const CriterionResult& result) {
  nlohmann::json j;
  j["criterion"] = result.criterion;
  j["norm_value"] = result.norm_value;
  j["bound"] = result.bound;
  j["margin"] = result.margin;
  j["detected"] = result.detected;
  j["detect_tol"] = result.detect_tol;
  if (result.params) j["params"] = params_json(*result.params);
  if (result.pair) {
    j["pair"] = nlohmann::json{result.pair->first, result.pair->second};
  }
  if (result.cut) j["cut"] = *result.cut;
  return j;
}

}  // namespace qsep
