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

#include <string>

#include <json.hpp>

#include "qsep/qmat.hpp"

namespace qsep {

// State file schema:
//   { "dims": [int, ...],
//     "re":   [d*d reals, row-major],
//     "im":   [d*d reals, row-major] }

nlohmann::json state_to_json(const DensityMatrix& rho);

/// Parses the schema above; when validate is true the result must pass
/// validate_density (throws std::invalid_argument listing violations).
DensityMatrix state_from_json(const nlohmann::json& j, bool validate = true);

DensityMatrix load_state(const std::string& path, bool validate = true);
void save_state(const DensityMatrix& rho, const std::string& path);

/// Square Hermitian matrix from a {"re": [...], "im": [...]} document
/// (row-major, side inferred from the length).
CMatrix load_square_matrix(const std::string& path);

}  // namespace qsep
