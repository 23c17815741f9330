// Copyright 2026 The trianneal Authors
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

#include <json.hpp>
#include <string>
#include <vector>

#include "trianneal/compiler.hpp"
#include "trianneal/embedverify.hpp"
#include "trianneal/model.hpp"

namespace trianneal {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

std::string read_text_file(const std::string& path);
/// Throws ResourceError when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

/// Model files look like {"n": 3, "h": {"0": 0.5}, "J": {"0,1": 1.0, "1,2": -1.0}}.
/// Field and coupling maps are optional; coupling keys must read "i,j" with i < j.
/// Errors are InputError messages naming the source and the offending location.
LogicalIsing model_from_json_text(const std::string& text, const std::string& source = "<model>");
LogicalIsing load_model(const std::string& path);
Json model_to_json(const LogicalIsing& model);

Json compiled_to_json(const CompiledModel& compiled);
CompiledModel compiled_from_json(const Json& json, const std::string& source = "<graph>");
CompiledModel load_compiled(const std::string& path);

/// Graphviz export. Edges carry kind=problem|penalty|field, nodes their role.
std::string to_dot(const CompiledModel& compiled);

Json to_json(const ValidationReport& report);
Json to_json(const EquivalenceReport& report);
Json to_json(const ResourceCounts& counts);

/// Written next to every output. Everything except wall_seconds is a pure
/// function of the command line.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  Json parameters = Json::object();
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;

  Json to_json() const;
};

}  // namespace trianneal
