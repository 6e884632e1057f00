// Copyright 2026 The strongprops Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// JSON views of reports, realizations and certificates. Every document
// produced by `envelope` carries "schema": "strongprops/1".

#ifndef STRONGPROPS_REPORT_HPP
#define STRONGPROPS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "strongprops/arbitrary.hpp"

namespace strongprops::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "strongprops/1";

Json to_json(const Matrix& A);  // array of rows
Json to_json(const Tolerances& tol);
Json to_json(const Graph& G);
Json to_json(const SignPattern& P);  // array of "+-0" row strings
Json to_json(const StrongPropertyReport& r);
Json to_json(const RealizationResult& r);
Json to_json(const ConjInvariantSpectrum& s);
Json to_json(const Inertia& in);
Json to_json(const RefinedInertia& in);
Json to_json(const NilpotencyCheck& c);
Json to_json(const Certificate& c);
Json to_json(const NilpotentJacobian& j);

// {"schema", "command", "tolerances", "seed"?, "result": body}
Json envelope(const std::string& command, const Tolerances& tol, Json body,
              std::optional<std::uint64_t> seed = std::nullopt);

// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace strongprops::report

#endif  // STRONGPROPS_REPORT_HPP
