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

#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "trianneal/error.hpp"
#include "trianneal/io.hpp"

using namespace trianneal;

TEST_CASE("model JSON round trip") {
  const auto m = random_instance(6, Distribution::uniform(-1, 1), Distribution::uniform(-1, 1), 3);
  const auto text = model_to_json(m).dump();
  CHECK(model_from_json_text(text) == m);

  const auto parsed = model_from_json_text(R"({"n": 3, "h": {"0": 0.5}, "J": {"0,1": 1.0, "1,2": -1.0}})");
  CHECK(parsed.size() == 3);
  CHECK(parsed.field(0) == 0.5);
  CHECK(parsed.coupling(1, 0) == 1.0);
  CHECK(parsed.coupling(2, 1) == -1.0);
  CHECK(model_from_json_text(R"({"n": 2})").couplings().empty());
}

TEST_CASE("model JSON errors") {
  auto message = [](const std::string& text) {
    try {
      model_from_json_text(text, "m.json");
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  const auto malformed = message("{\"n\": 3,\n  \"J\": {\"0,1\": }}");
  CHECK(malformed.find("m.json") != std::string::npos);
  CHECK(malformed.find("line 2") != std::string::npos);
  CHECK_FALSE(message(R"({"J": {}})").empty());
  CHECK_FALSE(message(R"({"n": 2.5})").empty());
  CHECK_FALSE(message(R"({"n": 0})").empty());
  CHECK_FALSE(message(R"({"n": 3, "J": {"1,0": 1}})").empty());
  CHECK_FALSE(message(R"({"n": 3, "J": {"0,3": 1}})").empty());
  CHECK_FALSE(message(R"({"n": 3, "J": {"0-1": 1}})").empty());
  CHECK_FALSE(message(R"({"n": 3, "h": {"0": "x"}})").empty());
  CHECK_FALSE(message(R"({"n": 3, "extra": 1})").empty());
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), InputError);
}

TEST_CASE("compiled artifact round trip") {
  for (bool fields : {false, true}) {
    const auto m = random_instance(5, Distribution::uniform(-1, 1),
                                   fields ? Distribution::uniform(-1, 1) : Distribution::zero(), 8);
    const auto c = compile(m, 3);
    const Json j = compiled_to_json(c);
    CHECK(j.at("format") == "trianneal-compiled");
    const auto back = compiled_from_json(Json::parse(j.dump()));
    CHECK(back.n_qubits() == c.n_qubits());
    CHECK(back.k_star == c.k_star);
    CHECK(back.penalty == c.penalty);
    CHECK(back.chains == c.chains);
    CHECK(back.hamiltonian == c.hamiltonian);
    CHECK(back.graph.couplers.size() == c.graph.couplers.size());
  }
  CHECK_THROWS_AS(compiled_from_json(Json::parse(R"({"format": "other"})")), InputError);
}

TEST_CASE("file helpers") {
  const auto path = (std::filesystem::temp_directory_path() / "trianneal_io_test.json").string();
  const auto m = random_instance(4, Distribution::uniform(-1, 1), Distribution::zero(), 1);
  write_text_file(path, model_to_json(m).dump(2));
  CHECK(load_model(path) == m);
  std::remove(path.c_str());
  CHECK_THROWS_AS(write_text_file("/nonexistent/dir/out.txt", "x"), ResourceError);
}

TEST_CASE("DOT export labels roles and kinds") {
  const auto m = random_instance(4, Distribution::uniform(-1, 1), Distribution::uniform(-1, 1), 2);
  const auto dot = to_dot(compile(m, 0));
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("kind=penalty") != std::string::npos);
  CHECK(dot.find("kind=problem") != std::string::npos);
  CHECK(dot.find("kind=field") != std::string::npos);
  CHECK(dot.find("role=") != std::string::npos);
}

TEST_CASE("report serialization") {
  const auto m = random_instance(4, Distribution::uniform(-1, 1), Distribution::zero(), 2);
  const auto c = compile(m, 0);
  const Json v = to_json(validate_architecture(c.graph));
  CHECK(v.at("passed") == true);
  const Json e = to_json(spectrum_equivalence(m, c, c.penalty));
  CHECK(e.at("bijection_ok") == true);
  CHECK(e.contains("penalty_used"));
  const Json r = to_json(resource_counts(5, true));
  CHECK(r.contains("couplers_predicted"));

  RunManifest manifest;
  manifest.command = "compile";
  manifest.seed = 7;
  const Json mj = manifest.to_json();
  CHECK(mj.at("tool_version") == kToolVersion);
  CHECK(mj.at("seed") == 7);
}
