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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "trianneal/io.hpp"
#include "trianneal/model.hpp"

namespace fs = std::filesystem;

namespace {

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() / ("trianneal_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Sandbox() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
  const std::string command = std::string(TRIANNEAL_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_model(const std::string& path, const trianneal::LogicalIsing& m) {
  trianneal::write_text_file(path, trianneal::model_to_json(m).dump());
}

int count_lines(const std::string& text, char lead) {
  int n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) n += !line.empty() && line[0] == lead;
  return n;
}

}  // namespace

TEST_CASE("compile and verify") {
  Sandbox box;
  using trianneal::Distribution;
  write_model(box.path("z2.json"), trianneal::random_instance(5, Distribution::uniform(-1, 1), Distribution::zero(), 1));
  write_model(box.path("f.json"), trianneal::random_instance(5, Distribution::uniform(-1, 1), Distribution::uniform(-1, 1), 1));

  CHECK(run("compile " + box.path("z2.json") + " --out " + box.path("z2g.json") + " --dot " + box.path("z2.dot")) == 0);
  const auto z2 = nlohmann::json::parse(slurp(box.path("z2g.json")));
  CHECK(z2.at("hamiltonian").at("n_qubits") == 12);
  CHECK(fs::exists(box.path("z2.dot")));
  CHECK(fs::exists(box.path("z2g.json.manifest.json")));

  CHECK(run("compile " + box.path("f.json") + " --out " + box.path("fg.json")) == 0);
  CHECK(nlohmann::json::parse(slurp(box.path("fg.json"))).at("hamiltonian").at("n_qubits") == 15);

  write_model(box.path("n4.json"), trianneal::random_instance(4, Distribution::uniform(-1, 1), Distribution::zero(), 5));
  CHECK(run("compile " + box.path("n4.json") + " --out " + box.path("n4g.json")) == 0);
  CHECK(run("verify " + box.path("n4.json") + " " + box.path("n4g.json") + " --out " + box.path("r.json")) == 0);
  const auto report = nlohmann::json::parse(slurp(box.path("r.json")));
  CHECK(report.at("report").at("bijection_ok") == true);

  CHECK(run("verify " + box.path("n4.json") + " " + box.path("n4g.json") + " --penalty 0 --out " + box.path("r0.json")) == 3);
  CHECK(nlohmann::json::parse(slurp(box.path("r0.json"))).at("report").at("low_spectrum_ok") == false);

  CHECK(run("penalty " + box.path("n4.json") + " " + box.path("n4g.json")) == 0);
}

TEST_CASE("exit codes") {
  Sandbox box;
  trianneal::write_text_file(box.path("bad.json"), "{\"n\": 3,\n \"J\": {\"0,1\": }}");
  CHECK(run("compile " + box.path("bad.json") + " --out " + box.path("g.json")) == 2);
  const std::string err_cmd = std::string(TRIANNEAL_CLI) + " compile " + box.path("bad.json") +
                              " --out " + box.path("g.json") + " 2>" + box.path("err.txt");
  CHECK(std::system(err_cmd.c_str()) != 0);
  CHECK(slurp(box.path("err.txt")).find("line 2") != std::string::npos);

  CHECK(run("compile") == 2);
  CHECK(run("no-such-command") == 2);
  CHECK(run("driver-scan --alpha 0") == 2);

  using trianneal::Distribution;
  write_model(box.path("big.json"), trianneal::random_instance(7, Distribution::uniform(-1, 1), Distribution::uniform(-1, 1), 1));
  CHECK(run("compile " + box.path("big.json") + " --out " + box.path("bigg.json")) == 0);
  CHECK(run("verify " + box.path("big.json") + " " + box.path("bigg.json")) == 4);
}

TEST_CASE("mixed scan shape and determinism") {
  Sandbox box;
  const std::string args = "mixed-scan --unique3sat 4 --instances 3 --seed 11 --grid 11 --refinement 5 --out ";
  REQUIRE(run(args + box.path("a.csv")) == 0);
  REQUIRE(run(args + box.path("b.csv")) == 0);
  const auto a = slurp(box.path("a.csv"));
  CHECK(a == slurp(box.path("b.csv")));
  CHECK(a.rfind("# trianneal mixed-scan v1", 0) == 0);
  CHECK(count_lines(a, 'i') == 1);  // header
  int data = 0;
  std::istringstream in(a);
  for (std::string line; std::getline(in, line);) data += line.rfind("u3sat-", 0) == 0;
  CHECK(data == 3);
  CHECK(a.find("summary") != std::string::npos);
  CHECK(fs::exists(box.path("a.csv.manifest.json")));
}

TEST_CASE("driver scan and gap commands") {
  Sandbox box;
  REQUIRE(run("driver-scan --jzz 0.5 --alpha 0 --lmin 4 --lmax 10 --out " + box.path("s.csv")) == 0);
  const auto s = slurp(box.path("s.csv"));
  CHECK(s.rfind("# trianneal driver-scan v1", 0) == 0);
  CHECK(s.find("sigma_delta_inf") != std::string::npos);
  CHECK(s.find("\n0.5,0,") != std::string::npos);

  using trianneal::Distribution;
  write_model(box.path("m.json"), trianneal::random_instance(3, Distribution::uniform(-1, 1), Distribution::uniform(-1, 1), 2));
  CHECK(run("gap " + box.path("m.json") + " --grid 11 --trace " + box.path("t.csv") + " --out " + box.path("g.json")) == 0);
  const auto g = nlohmann::json::parse(slurp(box.path("g.json")));
  CHECK(g.at("gap").get<double>() > 0);
  CHECK(count_lines(slurp(box.path("t.csv")), '0') + count_lines(slurp(box.path("t.csv")), '1') == 11);
}
