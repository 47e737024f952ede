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

#ifndef DISQLA_ERRORS_HPP
#define DISQLA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace disqla {

/// Invalid model or experiment configuration.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Problem too large for the configured memory / dense caps.
struct SizeError : std::length_error {
  using std::length_error::length_error;
};

/// Requested accuracy below what double precision can certify.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operator norm exceeds the unit disk assumed by a Chebyshev evaluation.
struct ScalingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's documented contract.
struct ContractViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace disqla

#endif
