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

#include "trianneal/io.hpp"

#include <fstream>
#include <sstream>

#include "trianneal/error.hpp"

namespace trianneal {

namespace {

std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON at " + location(text, e.byte) + " (" +
                     e.what() + ")");
  }
}

int parse_index(const std::string& token, const std::string& where) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw InputError(where + ": '" + token + "' is not a spin index");
  }
  if (used != token.size()) throw InputError(where + ": '" + token + "' is not a spin index");
  return value;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw InputError(where + ": expected a number");
  return j.get<double>();
}

template <class T>
T require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw InputError(where + ": missing key '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(where + ": key '" + key + "' has the wrong type");
  }
}

QubitRole parse_role(const std::string& s, const std::string& where) {
  if (s == "chain") return QubitRole::chain;
  if (s == "sign") return QubitRole::sign;
  throw InputError(where + ": unknown qubit role '" + s + "'");
}

CouplerKind parse_kind(const std::string& s, const std::string& where) {
  if (s == "problem") return CouplerKind::problem;
  if (s == "penalty") return CouplerKind::penalty;
  if (s == "field") return CouplerKind::field;
  throw InputError(where + ": unknown coupler kind '" + s + "'");
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ResourceError("write to '" + path + "' failed");
}

LogicalIsing model_from_json_text(const std::string& text, const std::string& source) {
  const Json doc = parse(text, source);
  if (!doc.is_object()) throw InputError(source + ": top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InputError(source + ": 'n' must be an integer");
  }
  const long n = doc["n"].get<long>();
  if (n < 1 || n > 4096) throw InputError(source + ": 'n' = " + std::to_string(n) + " out of range");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "h" && key != "J") {
      throw InputError(source + ": unknown key '" + key + "'");
    }
  }
  LogicalIsing model(static_cast<int>(n));
  if (doc.contains("h")) {
    if (!doc["h"].is_object()) throw InputError(source + ": 'h' must be an object");
    for (const auto& [key, value] : doc["h"].items()) {
      const std::string where = source + ": h[\"" + key + "\"]";
      const int i = parse_index(key, where);
      if (i < 0 || i >= n) throw InputError(where + ": index out of range");
      model.set_field(i, number(value, where));
    }
  }
  if (doc.contains("J")) {
    if (!doc["J"].is_object()) throw InputError(source + ": 'J' must be an object");
    for (const auto& [key, value] : doc["J"].items()) {
      const std::string where = source + ": J[\"" + key + "\"]";
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw InputError(where + ": key must read \"i,j\"");
      const int i = parse_index(key.substr(0, comma), where);
      const int j = parse_index(key.substr(comma + 1), where);
      if (i < 0 || j < 0 || i >= n || j >= n) throw InputError(where + ": index out of range");
      if (i >= j) throw InputError(where + ": key must satisfy i < j");
      model.set_coupling(i, j, number(value, where));
    }
  }
  return model;
}

LogicalIsing load_model(const std::string& path) {
  return model_from_json_text(read_text_file(path), path);
}

Json model_to_json(const LogicalIsing& model) {
  Json doc;
  doc["n"] = model.size();
  Json h = Json::object();
  for (const auto& [i, v] : model.fields()) h[std::to_string(i)] = v;
  Json couplings = Json::object();
  for (const auto& [e, v] : model.couplings()) {
    couplings[std::to_string(e.first) + "," + std::to_string(e.second)] = v;
  }
  doc["h"] = h;
  doc["J"] = couplings;
  return doc;
}

Json compiled_to_json(const CompiledModel& c) {
  Json doc;
  doc["format"] = "trianneal-compiled";
  doc["version"] = 1;
  doc["n_logical"] = c.n_logical;
  doc["k_star"] = c.k_star;
  doc["with_fields"] = c.with_fields;
  doc["penalty"] = c.penalty;
  doc["n_qubits"] = c.n_qubits();

  Json qubits = Json::array();
  for (const auto& q : c.graph.qubits) {
    qubits.push_back({{"id", q.id},
                      {"role", to_string(q.role)},
                      {"variable", q.variable},
                      {"local_field", q.local_field}});
  }
  doc["qubits"] = qubits;
  Json couplers = Json::array();
  for (const auto& e : c.graph.couplers) {
    couplers.push_back(
        {{"u", e.u}, {"v", e.v}, {"kind", to_string(e.kind)}, {"strength", e.strength}});
  }
  doc["couplers"] = couplers;

  Json chains = Json::object();
  for (const auto& [var, path] : c.chains.chains) chains[std::to_string(var)] = path;
  doc["chains"] = chains;
  doc["sign_chain"] = c.chains.sign_chain;
  doc["sign_variable"] = c.chains.sign_variable;

  const auto& h = c.hamiltonian;
  Json fields = Json::object();
  for (const auto& [q, v] : h.fields) fields[std::to_string(q)] = v;
  Json two_local = Json::array();
  for (const auto& [e, v] : h.two_local) two_local.push_back({e.first, e.second, v});
  Json penalties = Json::array();
  for (const auto& e : h.penalties) penalties.push_back({e.first, e.second});
  doc["hamiltonian"] = {{"n_qubits", h.n_qubits},
                        {"fields", fields},
                        {"two_local", two_local},
                        {"penalties", penalties},
                        {"constant_offset", h.constant_offset}};

  Json cells = Json::array();
  for (const auto& t : c.cells) {
    cells.push_back({{"a", t.a},
                     {"k_star", t.k_star},
                     {"b", t.b},
                     {"j_ab", t.j_ab},
                     {"j_a_kstar", t.j_a_kstar},
                     {"j_b_kstar", t.j_b_kstar},
                     {"f_a", t.f_a},
                     {"f_b", t.f_b},
                     {"q0", t.q0},
                     {"q1", t.q1}});
  }
  doc["cells"] = cells;
  return doc;
}

CompiledModel compiled_from_json(const Json& doc, const std::string& source) {
  if (!doc.is_object() || doc.value("format", "") != "trianneal-compiled") {
    throw InputError(source + ": not a compiled artifact");
  }
  if (doc.value("version", 0) != 1) throw InputError(source + ": unsupported artifact version");
  CompiledModel c;
  c.n_logical = require<int>(doc, "n_logical", source);
  c.k_star = require<int>(doc, "k_star", source);
  c.with_fields = require<bool>(doc, "with_fields", source);
  c.penalty = require<double>(doc, "penalty", source);

  const auto qubits = require<Json>(doc, "qubits", source);
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    const std::string where = source + ": qubits[" + std::to_string(i) + "]";
    const auto& q = qubits[i];
    c.graph.qubits.push_back({require<int>(q, "id", where),
                              parse_role(require<std::string>(q, "role", where), where),
                              require<int>(q, "variable", where),
                              require<double>(q, "local_field", where)});
  }
  const auto couplers = require<Json>(doc, "couplers", source);
  for (std::size_t i = 0; i < couplers.size(); ++i) {
    const std::string where = source + ": couplers[" + std::to_string(i) + "]";
    const auto& e = couplers[i];
    c.graph.couplers.push_back({require<int>(e, "u", where), require<int>(e, "v", where),
                                parse_kind(require<std::string>(e, "kind", where), where),
                                require<double>(e, "strength", where)});
  }

  const auto chains = require<Json>(doc, "chains", source);
  for (const auto& [key, path] : chains.items()) {
    const std::string where = source + ": chains[\"" + key + "\"]";
    c.chains.chains[parse_index(key, where)] = path.get<std::vector<int>>();
  }
  c.chains.sign_chain = require<std::vector<int>>(doc, "sign_chain", source);
  c.chains.sign_variable = require<int>(doc, "sign_variable", source);

  const auto h = require<Json>(doc, "hamiltonian", source);
  const std::string hw = source + ": hamiltonian";
  c.hamiltonian.n_qubits = require<int>(h, "n_qubits", hw);
  c.hamiltonian.constant_offset = require<double>(h, "constant_offset", hw);
  const auto fields = require<Json>(h, "fields", hw);
  for (const auto& [key, v] : fields.items()) {
    c.hamiltonian.fields[parse_index(key, hw + ".fields")] = number(v, hw + ".fields");
  }
  for (const auto& t : require<Json>(h, "two_local", hw)) {
    if (!t.is_array() || t.size() != 3) throw InputError(hw + ".two_local: expected [u, v, J]");
    c.hamiltonian.two_local[{t[0].get<int>(), t[1].get<int>()}] = t[2].get<double>();
  }
  for (const auto& t : require<Json>(h, "penalties", hw)) {
    if (!t.is_array() || t.size() != 2) throw InputError(hw + ".penalties: expected [u, v]");
    c.hamiltonian.penalties.insert({t[0].get<int>(), t[1].get<int>()});
  }

  const auto cells = require<Json>(doc, "cells", source);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = source + ": cells[" + std::to_string(i) + "]";
    const auto& t = cells[i];
    TriangleCell cell;
    cell.a = require<int>(t, "a", where);
    cell.k_star = require<int>(t, "k_star", where);
    cell.b = require<int>(t, "b", where);
    cell.j_ab = require<double>(t, "j_ab", where);
    cell.j_a_kstar = require<double>(t, "j_a_kstar", where);
    cell.j_b_kstar = require<double>(t, "j_b_kstar", where);
    cell.f_a = require<double>(t, "f_a", where);
    cell.f_b = require<double>(t, "f_b", where);
    cell.q0 = require<int>(t, "q0", where);
    cell.q1 = require<int>(t, "q1", where);
    c.cells.push_back(cell);
  }
  if (c.hamiltonian.n_qubits != static_cast<int>(c.graph.qubits.size())) {
    throw InputError(source + ": qubit count disagrees with the Hamiltonian");
  }
  return c;
}

CompiledModel load_compiled(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return compiled_from_json(parse(text, path), path);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string to_dot(const CompiledModel& c) {
  std::ostringstream out;
  out.precision(17);
  out << "graph trianneal {\n";
  out << "  // n_logical=" << c.n_logical << " k_star=" << c.k_star
      << " with_fields=" << (c.with_fields ? "true" : "false") << " penalty=" << c.penalty
      << "\n";
  for (const auto& q : c.graph.qubits) {
    out << "  q" << q.id << " [role=" << to_string(q.role) << ", variable=" << q.variable
        << ", local_field=" << q.local_field << ", label=\"" << q.id << "\"];\n";
  }
  for (const auto& e : c.graph.couplers) {
    out << "  q" << e.u << " -- q" << e.v << " [kind=" << to_string(e.kind)
        << ", strength=" << e.strength
        << (e.kind == CouplerKind::penalty ? ", style=bold" : "") << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json to_json(const ValidationReport& r) {
  Json histogram = Json::object();
  for (const auto& [degree, count] : r.degree_histogram) histogram[std::to_string(degree)] = count;
  return {{"passed", r.passed},
          {"max_degree", r.max_degree},
          {"degree_histogram", histogram},
          {"chains_are_paths", r.chains_are_paths},
          {"penalty_uniform", r.penalty_uniform},
          {"connected", r.connected},
          {"offending_qubits", r.offending_qubits},
          {"failures", r.failures}};
}

Json to_json(const EquivalenceReport& r) {
  Json doc = {{"passed", r.passed()},
              {"feasible_count", r.feasible_count},
              {"expected_feasible_count", r.expected_feasible_count},
              {"energy_max_abs_error", r.energy_max_abs_error},
              {"energies_ok", r.energies_ok},
              {"bijection_ok", r.bijection_ok},
              {"low_spectrum_ok", r.low_spectrum_ok},
              {"penalty_used", r.penalty_used},
              {"max_feasible_energy", r.max_feasible_energy}};
  doc["min_infeasible_energy"] =
      r.min_infeasible_energy ? Json(*r.min_infeasible_energy) : Json(nullptr);
  return doc;
}

Json to_json(const ResourceCounts& r) {
  Json doc = {{"n_spins", r.n_spins},
              {"with_fields", r.with_fields},
              {"qubits_predicted", r.n_predicted},
              {"qubits_actual", r.n_actual},
              {"qubits_match", r.qubits_match},
              {"couplers_problem", r.actual.problem},
              {"couplers_penalty", r.actual.penalty},
              {"couplers_field", r.actual.field},
              {"couplers_total", r.actual.total()}};
  if (r.couplers_predicted) {
    doc["couplers_predicted"] = *r.couplers_predicted;
    doc["couplers_match"] = r.couplers_match;
  }
  if (r.ferro_predicted) {
    doc["ferro_predicted"] = *r.ferro_predicted;
    doc["ferro_match"] = r.ferro_match;
  }
  return doc;
}

Json RunManifest::to_json() const {
  return {{"tool", "trianneal"},
          {"tool_version", kToolVersion},
          {"command", command},
          {"inputs", inputs},
          {"outputs", outputs},
          {"parameters", parameters},
          {"seed", seed},
          {"wall_seconds", wall_seconds}};
}

}  // namespace trianneal
