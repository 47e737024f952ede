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

#include "disqla/records.hpp"

#include <json.hpp>

#include "disqla/errors.hpp"

namespace disqla {

using nlohmann::json;

std::string expansion_json(const ChebyshevExpansion& p) {
  json j;
  j["tag"] = p.tag;
  j["parameters"] = p.parameters;
  j["degree"] = p.degree();
  json coeffs = json::array();
  for (const Complex& a : p.coefficients) coeffs.push_back({a.real(), a.imag()});
  j["coefficients"] = std::move(coeffs);
  j["rho"] = p.rho;
  j["ellipse_max"] = p.ellipse_max;
  j["error_bound"] = p.error_bound;
  return j.dump(2);
}

ChebyshevExpansion expansion_from_json(std::string_view text) {
  ChebyshevExpansion p;
  try {
    const json j = json::parse(text.begin(), text.end());
    p.tag = j.at("tag").get<std::string>();
    p.parameters = j.at("parameters").get<std::map<std::string, double>>();
    for (const json& a : j.at("coefficients")) {
      p.coefficients.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
    }
    p.rho = j.at("rho").get<double>();
    p.ellipse_max = j.at("ellipse_max").get<double>();
    p.error_bound = j.at("error_bound").get<double>();
    if (j.at("degree").get<int>() != p.degree()) throw ConfigError("degree does not match coefficients");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("expansion record: ") + e.what());
  }
  return p;
}

std::string estimate_json(const EstimateRecord& r) {
  json j;
  j["value"] = {r.value.real(), r.value.imag()};
  j["eps"] = r.eps;
  j["delta"] = r.delta;
  j["queries"] = r.queries;
  j["samples"] = r.samples;
  j["standard_error"] = r.standard_error < 0 ? json(nullptr) : json(r.standard_error);
  j["key"] = r.key;
  return j.dump(2);
}

}  // namespace disqla
