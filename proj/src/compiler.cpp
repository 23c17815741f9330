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

#include "trianneal/compiler.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <queue>

#include "trianneal/error.hpp"

namespace trianneal {

namespace {

// Triangle energy with labels l0 = a, l1 = k*, l2 = b; bit 0 is spin +1.
double triangle_energy(const char* l, double j_ab, double j_a_kstar, double j_b_kstar,
                       double f_a, double f_kstar, double f_b) {
  const double s0 = l[0] == '0' ? 1.0 : -1.0;
  const double s1 = l[1] == '0' ? 1.0 : -1.0;
  const double s2 = l[2] == '0' ? 1.0 : -1.0;
  return j_a_kstar * s0 * s1 + j_ab * s0 * s2 + j_b_kstar * s1 * s2 + f_a * s0 +
         f_kstar * s1 + f_b * s2;
}

// Symmetric encoding: one representative per physical class q0 q1.
constexpr const char* kZ2Table[4] = {"000", "110", "011", "101"};

// Signed encoding, indexed by q0 q1 q2 read as a binary number.
constexpr const char* kSignedTable[8] = {"000", "111", "110", "001",
                                         "011", "100", "101", "010"};

inline double zval(int bit) { return bit ? -1.0 : 1.0; }

}  // namespace

std::vector<std::array<int, 3>> decompose(int n_spins, int k_star) {
  if (n_spins < 3) throw InputError("triangle decomposition needs N >= 3");
  if (k_star < 0 || k_star >= n_spins) {
    throw InputError("k* = " + std::to_string(k_star) + " outside [0, " +
                     std::to_string(n_spins) + ")");
  }
  std::vector<int> others;
  for (int i = 0; i < n_spins; ++i) {
    if (i != k_star) others.push_back(i);
  }
  std::vector<std::array<int, 3>> triads;
  triads.reserve(others.size() * (others.size() - 1) / 2);
  for (std::size_t row = 1; row < others.size(); ++row) {
    for (std::size_t col = 0; col < row; ++col) {
      triads.push_back({others[col], k_star, others[row]});
    }
  }
  return triads;
}

CellZ2Solution solve_cell_z2(double j_ab, double j_a_kstar, double j_b_kstar) {
  Eigen::Matrix4d system;
  Eigen::Vector4d rhs;
  for (int row = 0; row < 4; ++row) {
    const double z0 = zval((row >> 1) & 1);
    const double z1 = zval(row & 1);
    system.row(row) << 1.0, z0, z1, z0 * z1;
    rhs(row) = triangle_energy(kZ2Table[row], j_ab, j_a_kstar, j_b_kstar, 0, 0, 0);
  }
  const Eigen::Vector4d x = system.fullPivLu().solve(rhs);
  return {x(1), x(2), x(3), x(0)};
}

CellFieldSolution solve_cell_table(const std::array<double, 8>& energies) {
  Eigen::Matrix<double, 8, 8> system;
  Eigen::Matrix<double, 8, 1> rhs;
  for (int row = 0; row < 8; ++row) {
    const double z0 = zval((row >> 2) & 1);
    const double z1 = zval((row >> 1) & 1);
    const double z2 = zval(row & 1);
    system.row(row) << 1.0, z0, z1, z2, z0 * z1, z0 * z2, z1 * z2, z0 * z1 * z2;
    rhs(row) = energies[row];
  }
  const Eigen::Matrix<double, 8, 1> x = system.fullPivLu().solve(rhs);
  CellFieldSolution out;
  out.constant = x(0);
  out.field = {x(1), x(2), x(3)};
  out.j01 = x(4);
  out.j02 = x(5);
  out.j12 = x(6);
  out.triple = x(7);
  return out;
}

CellFieldSolution solve_cell_fields(double j_ab, double j_a_kstar, double j_b_kstar,
                                    double f_a, double f_b, double f_kstar) {
  std::array<double, 8> energies{};
  for (int row = 0; row < 8; ++row) {
    energies[row] =
        triangle_energy(kSignedTable[row], j_ab, j_a_kstar, j_b_kstar, f_a, f_kstar, f_b);
  }
  CellFieldSolution out = solve_cell_table(energies);
  if (std::abs(out.triple) > kEnergyTolerance) {
    throw ValidationError("cell needs a three-body term (coefficient " +
                          std::to_string(out.triple) +
                          "); a field was routed onto the shared node");
  }
  return out;
}

std::string to_string(QubitRole role) {
  return role == QubitRole::chain ? "chain" : "sign";
}

std::string to_string(CouplerKind kind) {
  switch (kind) {
    case CouplerKind::problem:
      return "problem";
    case CouplerKind::penalty:
      return "penalty";
    case CouplerKind::field:
      return "field";
  }
  return "?";
}

std::vector<int> HardwareGraph::degrees() const {
  std::vector<int> deg(qubits.size(), 0);
  for (const auto& c : couplers) {
    if (c.u >= 0 && static_cast<std::size_t>(c.u) < deg.size()) ++deg[c.u];
    if (c.v >= 0 && static_cast<std::size_t>(c.v) < deg.size()) ++deg[c.v];
  }
  return deg;
}

std::vector<std::vector<int>> ChainSet::all_paths() const {
  std::vector<std::vector<int>> out;
  for (const auto& [_, path] : chains) out.push_back(path);
  if (!sign_chain.empty()) out.push_back(sign_chain);
  return out;
}

double PhysicalHamiltonian::problem_energy(std::uint64_t state) const noexcept {
  double e = constant_offset;
  for (const auto& [q, h] : fields) e += h * zval((state >> q) & 1u);
  for (const auto& [edge, j] : two_local) {
    e += j * zval(((state >> edge.first) ^ (state >> edge.second)) & 1u);
  }
  return e;
}

int PhysicalHamiltonian::broken_links(std::uint64_t state) const noexcept {
  int broken = 0;
  for (const auto& [u, v] : penalties) broken += ((state >> u) ^ (state >> v)) & 1u;
  return broken;
}

double PhysicalHamiltonian::energy(std::uint64_t state, double penalty) const noexcept {
  return problem_energy(state) + 2.0 * penalty * broken_links(state);
}

double PhysicalHamiltonian::energy(const std::vector<std::uint8_t>& bits,
                                   double penalty) const {
  if (bits.size() != static_cast<std::size_t>(n_qubits)) {
    throw DimensionError("physical state has " + std::to_string(bits.size()) +
                         " bits, expected " + std::to_string(n_qubits));
  }
  auto z = [&](int q) { return zval(bits[q]); };
  double e = constant_offset;
  for (const auto& [q, h] : fields) e += h * z(q);
  for (const auto& [edge, j] : two_local) e += j * z(edge.first) * z(edge.second);
  for (const auto& [u, v] : penalties) e += penalty * (1.0 - z(u) * z(v));
  return e;
}

double default_penalty(const LogicalIsing& model) {
  const double bound = 2.0 * model.coefficient_l1();
  return bound > 0.0 ? bound : 1.0;
}

CompiledModel compile(const LogicalIsing& model, int k_star, std::optional<double> penalty,
                      FieldMode mode) {
  const int n = model.size();
  const auto triads = decompose(n, k_star);
  const double jp = penalty.value_or(default_penalty(model));
  if (!std::isfinite(jp) || jp < 0.0) throw InputError("penalty must be finite and >= 0");

  bool with_fields = !model.z2_symmetric();
  if (mode == FieldMode::z2) {
    if (with_fields) throw InputError("model has non-zero fields; cannot compile as Z2");
    with_fields = false;
  } else if (mode == FieldMode::fields) {
    with_fields = true;
  }

  CompiledModel out;
  out.n_logical = n;
  out.k_star = k_star;
  out.with_fields = with_fields;
  out.penalty = jp;

  const int cell_qubits = 2 * static_cast<int>(triads.size());
  const int chain_length = n - 2;
  const int n_qubits = cell_qubits + (with_fields ? chain_length : 0);

  // Chain membership: variable -> (partner, qubit), later sorted by partner.
  std::map<int, std::vector<std::pair<int, int>>> members;
  for (std::size_t c = 0; c < triads.size(); ++c) {
    const auto [a, ks, b] = triads[c];
    members[a].push_back({b, 2 * static_cast<int>(c)});
    members[b].push_back({a, 2 * static_cast<int>(c) + 1});
  }
  for (auto& [var, list] : members) {
    std::sort(list.begin(), list.end());
    std::vector<int> path;
    for (const auto& [partner, q] : list) path.push_back(q);
    out.chains.chains[var] = std::move(path);
  }
  out.chains.sign_variable = k_star;

  std::vector<double> field(n_qubits, 0.0);
  std::vector<QubitRole> role(n_qubits, QubitRole::chain);
  std::vector<int> variable(n_qubits, k_star);

  // Cells. The (i, k*) coupling lives entirely in chain i's first cell.
  for (std::size_t c = 0; c < triads.size(); ++c) {
    const auto [a, ks, b] = triads[c];
    TriangleCell cell;
    cell.a = a;
    cell.k_star = ks;
    cell.b = b;
    cell.q0 = 2 * static_cast<int>(c);
    cell.q1 = cell.q0 + 1;
    cell.j_ab = model.coupling(a, b);
    cell.j_a_kstar = out.chains.chains[a].front() == cell.q0 ? model.coupling(a, ks) : 0.0;
    cell.j_b_kstar = out.chains.chains[b].front() == cell.q1 ? model.coupling(b, ks) : 0.0;

    const CellZ2Solution sol = solve_cell_z2(cell.j_ab, cell.j_a_kstar, cell.j_b_kstar);
    field[cell.q0] += sol.h_q0;
    field[cell.q1] += sol.h_q1;
    out.hamiltonian.constant_offset += sol.constant;
    out.hamiltonian.two_local[{cell.q0, cell.q1}] = sol.j_pair;
    out.graph.couplers.push_back({cell.q0, cell.q1, CouplerKind::problem, sol.j_pair});
    variable[cell.q0] = a;
    variable[cell.q1] = b;
    out.cells.push_back(cell);
  }

  auto link_path = [&](const std::vector<int>& path) {
    for (std::size_t k = 1; k < path.size(); ++k) {
      const int u = path[k - 1];
      const int v = path[k];
      out.hamiltonian.penalties.insert({std::min(u, v), std::max(u, v)});
      out.graph.couplers.push_back({u, v, CouplerKind::penalty, jp});
    }
  };
  for (const auto& [var, path] : out.chains.chains) link_path(path);

  if (with_fields) {
    for (int k = 0; k < chain_length; ++k) {
      const int q = cell_qubits + k;
      out.chains.sign_chain.push_back(q);
      role[q] = QubitRole::sign;
      variable[q] = k_star;
    }
    link_path(out.chains.sign_chain);
    const auto& sign = out.chains.sign_chain;
    field[sign.front()] += model.field(k_star);

    // h_i s_i = h_i (s_i s_k*) s_k*: one coupler between an end of chain i
    // and a sign qubit. Sign ends take two couplers, interior qubits one.
    std::vector<int> slots;
    if (sign.size() == 1) {
      slots.assign(3, sign.front());
    } else {
      slots = {sign.front(), sign.front(), sign.back(), sign.back()};
      for (std::size_t k = 1; k + 1 < sign.size(); ++k) slots.push_back(sign[k]);
    }
    std::size_t next = 0;
    for (const auto& [var, path] : out.chains.chains) {
      if (next >= slots.size()) throw ValidationError("sign chain has no free coupler slot");
      const int u = path.back();
      const int v = slots[next++];
      const double h = model.field(var);
      out.hamiltonian.two_local[{std::min(u, v), std::max(u, v)}] = h;
      out.graph.couplers.push_back({u, v, CouplerKind::field, h});
    }
  }

  out.hamiltonian.n_qubits = n_qubits;
  for (int q = 0; q < n_qubits; ++q) {
    if (field[q] != 0.0) out.hamiltonian.fields[q] = field[q];
    out.graph.qubits.push_back({q, role[q], variable[q], field[q]});
  }

  const auto deg = out.graph.degrees();
  for (int q = 0; q < n_qubits; ++q) {
    if (deg[q] > kMaxDegree) {
      throw ValidationError("compilation produced degree " + std::to_string(deg[q]) +
                            " at qubit " + std::to_string(q));
    }
  }
  const ValidationReport report = validate_architecture(out.graph);
  if (!report.passed) {
    std::string msg = "compiled graph failed validation:";
    for (const auto& f : report.failures) msg += " " + f + ";";
    throw ValidationError(msg);
  }
  return out;
}

ValidationReport validate_architecture(const HardwareGraph& graph) {
  ValidationReport report;
  const int n = static_cast<int>(graph.qubits.size());
  auto fail = [&](std::string what) {
    report.passed = false;
    report.failures.push_back(std::move(what));
  };

  for (int q = 0; q < n; ++q) {
    if (graph.qubits[q].id != q) fail("qubit at position " + std::to_string(q) + " has id " +
                                      std::to_string(graph.qubits[q].id));
  }

  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> adjacency(n);
  for (const auto& c : graph.couplers) {
    if (c.u < 0 || c.v < 0 || c.u >= n || c.v >= n) {
      fail("coupler (" + std::to_string(c.u) + ", " + std::to_string(c.v) +
           ") references a missing qubit");
      continue;
    }
    if (c.u == c.v) {
      fail("self-coupler on qubit " + std::to_string(c.u));
      continue;
    }
    if (!seen.insert({std::min(c.u, c.v), std::max(c.u, c.v)}).second) {
      fail("duplicate coupler (" + std::to_string(c.u) + ", " + std::to_string(c.v) + ")");
    }
    adjacency[c.u].push_back(c.v);
    adjacency[c.v].push_back(c.u);
  }

  const auto deg = graph.degrees();
  for (int q = 0; q < n; ++q) {
    report.max_degree = std::max(report.max_degree, deg[q]);
    report.degree_histogram[deg[q]]++;
    if (deg[q] > kMaxDegree) {
      report.offending_qubits.push_back(q);
      fail("qubit " + std::to_string(q) + " has degree " + std::to_string(deg[q]));
    }
  }

  // Penalty links: uniform non-negative strength, within one chain, and each
  // chain's links form a single simple path over all of its qubits.
  std::optional<double> strength;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> chain_links;
  std::map<std::pair<int, int>, std::vector<int>> chain_members;
  for (const auto& q : graph.qubits) {
    chain_members[{static_cast<int>(q.role), q.variable}].push_back(q.id);
  }
  for (const auto& c : graph.couplers) {
    if (c.kind != CouplerKind::penalty || c.u < 0 || c.v < 0 || c.u >= n || c.v >= n) continue;
    if (!strength) strength = c.strength;
    if (c.strength < 0.0 || std::abs(c.strength - *strength) > 1e-12) {
      report.penalty_uniform = false;
    }
    const auto& qu = graph.qubits[c.u];
    const auto& qv = graph.qubits[c.v];
    if (qu.role != qv.role || qu.variable != qv.variable) {
      report.chains_are_paths = false;
      fail("penalty coupler (" + std::to_string(c.u) + ", " + std::to_string(c.v) +
           ") joins different chains");
      continue;
    }
    chain_links[{static_cast<int>(qu.role), qu.variable}].push_back({c.u, c.v});
  }
  if (!report.penalty_uniform) fail("penalty couplers have non-uniform or negative strength");

  for (const auto& [key, members] : chain_members) {
    const auto& links = chain_links[key];
    std::map<int, std::vector<int>> adj;
    for (const auto& [u, v] : links) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    bool path = links.size() + 1 == members.size();
    for (const auto& [q, nb] : adj) path = path && nb.size() <= 2;
    if (path && !members.empty()) {
      std::set<int> reached{members.front()};
      std::vector<int> stack{members.front()};
      while (!stack.empty()) {
        const int q = stack.back();
        stack.pop_back();
        for (int nb : adj[q]) {
          if (reached.insert(nb).second) stack.push_back(nb);
        }
      }
      path = reached.size() == members.size();
    }
    if (!path) {
      report.chains_are_paths = false;
      fail(std::string(key.first == static_cast<int>(QubitRole::sign) ? "sign" : "chain") +
           " " + std::to_string(key.second) + " is not a simple path");
    }
  }

  if (n > 0) {
    std::vector<char> reached(n, 0);
    std::queue<int> frontier;
    frontier.push(0);
    reached[0] = 1;
    int count = 1;
    while (!frontier.empty()) {
      const int q = frontier.front();
      frontier.pop();
      for (int nb : adjacency[q]) {
        if (!reached[nb]) {
          reached[nb] = 1;
          ++count;
          frontier.push(nb);
        }
      }
    }
    report.connected = count == n;
    if (!report.connected) fail("hardware graph is disconnected");
  }
  return report;
}

ResourceCounts resource_counts(int n_spins, bool with_fields) {
  if (n_spins < 3) throw InputError("resource counts need N >= 3");
  ResourceCounts rc;
  rc.n_spins = n_spins;
  rc.with_fields = with_fields;
  const long n = n_spins;
  rc.n_predicted = with_fields ? n * (n - 2) : (n - 1) * (n - 2);
  if (with_fields) {
    rc.couplers_predicted = n * (3 * n - 5) / 2;
    rc.ferro_predicted = n * (n - 2);
  }

  const CompiledModel compiled = compile(LogicalIsing(n_spins), 0, 1.0,
                                         with_fields ? FieldMode::fields : FieldMode::z2);
  rc.n_actual = compiled.n_qubits();
  for (const auto& c : compiled.graph.couplers) {
    switch (c.kind) {
      case CouplerKind::problem:
        ++rc.actual.problem;
        break;
      case CouplerKind::penalty:
        ++rc.actual.penalty;
        break;
      case CouplerKind::field:
        ++rc.actual.field;
        break;
    }
  }
  rc.qubits_match = rc.n_actual == rc.n_predicted;
  rc.couplers_match = rc.couplers_predicted && *rc.couplers_predicted == rc.actual.total();
  rc.ferro_match = rc.ferro_predicted && *rc.ferro_predicted == rc.actual.penalty;
  return rc;
}

}  // namespace trianneal
