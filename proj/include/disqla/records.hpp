// Copyright 2026 The disqla Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISQLA_RECORDS_HPP
#define DISQLA_RECORDS_HPP

#include <string>
#include <string_view>

#include "disqla/chebyshev.hpp"
#include "disqla/estimation.hpp"

namespace disqla {

/// {"tag", "parameters", "degree", "coefficients": [[re, im], ...],
///  "rho", "ellipse_max", "error_bound"}
std::string expansion_json(const ChebyshevExpansion& p);
ChebyshevExpansion expansion_from_json(std::string_view text);

/// {"value": [re, im], "eps", "delta", "queries", "samples",
///  "standard_error", "key"}; standard_error is null when not applicable.
std::string estimate_json(const EstimateRecord& r);

}  // namespace disqla

#endif
