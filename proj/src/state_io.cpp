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

#include "qsep/state_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace qsep {

namespace {

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

std::vector<double> real_array(const nlohmann::json& j, const char* key,
                               size_t expected) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw std::invalid_argument(std::string("state file: missing array '") +
                                key + "'");
  }
  std::vector<double> out;
  out.reserve(j[key].size());
  for (const auto& v : j[key]) {
    if (!v.is_number()) {
      throw std::invalid_argument(std::string("state file: '") + key +
                                  "' must contain numbers only");
    }
    out.push_back(v.get<double>());
  }
  if (out.size() != expected) {
    throw std::invalid_argument(
        std::string("state file: '") + key + "' has " +
        std::to_string(out.size()) + " entries, expected " +
        std::to_string(expected));
  }
  return out;
}

CMatrix matrix_from_parts(const std::vector<double>& re,
                          const std::vector<double>& im, Eigen::Index d) {
  CMatrix mat(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) {
      mat(r, c) = Complex(re[r * d + c], im[r * d + c]);
    }
  return mat;
}

}  // namespace

nlohmann::json state_to_json(const DensityMatrix& rho) {
  const Eigen::Index d = rho.dim();
  std::vector<double> re(d * d), im(d * d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) {
      re[r * d + c] = rho.mat(r, c).real();
      im[r * d + c] = rho.mat(r, c).imag();
    }
  return nlohmann::json{{"dims", rho.dims}, {"re", re}, {"im", im}};
}

DensityMatrix state_from_json(const nlohmann::json& j, bool validate) {
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty()) {
    throw std::invalid_argument(
        "state file: missing non-empty 'dims' array");
  }
  std::vector<int> dims;
  Eigen::Index d = 1;
  for (const auto& v : j["dims"]) {
    if (!v.is_number_integer() || v.get<int>() < 1) {
      throw std::invalid_argument(
          "state file: 'dims' must be positive integers");
    }
    dims.push_back(v.get<int>());
    d *= dims.back();
  }
  const size_t n = static_cast<size_t>(d) * d;
  const std::vector<double> re = real_array(j, "re", n);
  const std::vector<double> im = real_array(j, "im", n);
  CMatrix mat = matrix_from_parts(re, im, d);
  return validate ? make_density(std::move(mat), std::move(dims))
                  : make_density_unchecked(std::move(mat), std::move(dims));
}

DensityMatrix load_state(const std::string& path, bool validate) {
  return state_from_json(parse_file(path), validate);
}

void save_state(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  out << state_to_json(rho).dump(2) << '\n';
  if (!out) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

CMatrix load_square_matrix(const std::string& path) {
  const nlohmann::json j = parse_file(path);
  if (!j.contains("re") || !j["re"].is_array()) {
    throw std::invalid_argument("matrix file: missing 're' array");
  }
  const size_t n = j["re"].size();
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(n))));
  if (static_cast<size_t>(d) * d != n || d < 1) {
    throw std::invalid_argument(
        "matrix file: 're' length must be a positive perfect square");
  }
  const std::vector<double> re = real_array(j, "re", n);
  const std::vector<double> im = real_array(j, "im", n);
  return matrix_from_parts(re, im, d);
}

}  // namespace qsep
