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

#include "trianneal/drivers.hpp"

#include <cmath>
#include <random>

#include "trianneal/eigensolver.hpp"
#include "trianneal/error.hpp"

namespace trianneal {

void DriverSpec::validate() const {
  if (!std::isfinite(j_zz) || !std::isfinite(alpha)) {
    throw InputError("driver parameters must be finite");
  }
  if (j_zz < 0.0) throw InputError("J_zz must be >= 0");
  if (alpha < 0.0) throw InputError("alpha must be >= 0");
}

std::string to_string(DriverKind kind) {
  switch (kind) {
    case DriverKind::standard:
      return "standard";
    case DriverKind::tfim:
      return "tfim";
    case DriverKind::xyz:
      return "xyz";
    case DriverKind::ghz:
      return "ghz";
  }
  return "?";
}

DriverKind parse_driver_kind(const std::string& text) {
  if (text == "standard") return DriverKind::standard;
  if (text == "tfim") return DriverKind::tfim;
  if (text == "xyz") return DriverKind::xyz;
  if (text == "ghz") return DriverKind::ghz;
  throw InputError("unknown driver '" + text + "' (standard | tfim | xyz | ghz)");
}

namespace {

void add_chain_terms(OperatorSpec& spec, const DriverSpec& d, const std::vector<int>& chain) {
  switch (d.kind) {
    case DriverKind::standard:
      break;
    case DriverKind::tfim:
      for (int q : chain) spec.x(q, -1.0);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) spec.zz(chain[i], chain[i + 1], -d.j_zz);
      break;
    case DriverKind::xyz:
      for (int q : chain) spec.x(q, -1.0);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        spec.zz(chain[i], chain[i + 1], -d.j_zz);
        if (d.alpha != 0.0) spec.xx(chain[i], chain[i + 1], -d.j_zz * d.alpha);
      }
      break;
    case DriverKind::ghz: {
      std::map<int, Pauli> word;
      for (int q : chain) word[q] = Pauli::X;
      spec.add(std::move(word), -1.0);
      for (std::size_t r = 1; r < chain.size(); ++r) spec.zz(chain[0], chain[r], -1.0);
      break;
    }
  }
}

}  // namespace

OperatorSpec chain_driver(const DriverSpec& spec, int l) {
  spec.validate();
  if (l < 2) throw InputError("chain drivers need l >= 2");
  std::vector<int> chain(l);
  for (int i = 0; i < l; ++i) chain[i] = i;
  return layout_driver(spec, {chain}, l);
}

OperatorSpec layout_driver(const DriverSpec& spec, const std::vector<std::vector<int>>& chains,
                           int n_qubits) {
  spec.validate();
  if (spec.kind == DriverKind::standard) return standard_driver(n_qubits);
  OperatorSpec out(n_qubits);
  for (const auto& chain : chains) add_chain_terms(out, spec, chain);
  out.validate();
  return out;
}

OperatorSpec layout_driver(const DriverSpec& spec, const ChainSet& chains, int n_qubits) {
  return layout_driver(spec, chains.all_paths(), n_qubits);
}

OperatorSpec physical_operator(const CompiledModel& compiled, double penalty) {
  const auto& h = compiled.hamiltonian;
  OperatorSpec out(h.n_qubits);
  double constant = h.constant_offset;
  for (const auto& [q, v] : h.fields) out.z(q, v);
  for (const auto& [e, v] : h.two_local) out.zz(e.first, e.second, v);
  for (const auto& e : h.penalties) {
    out.zz(e.first, e.second, -penalty);
    constant += penalty;
  }
  if (constant != 0.0) out.add({}, constant);
  out.validate();
  return out;
}

OperatorSpec chain_agreement_operator(const std::vector<std::vector<int>>& chains,
                                      int n_qubits) {
  OperatorSpec out(n_qubits);
  for (const auto& chain : chains) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) out.zz(chain[i], chain[i + 1], 1.0);
  }
  out.validate();
  return out;
}

double logical_projection(const Eigen::VectorXcd& state, int l) {
  if (l < 1 || l > kMaxMatrixFreeQubits ||
      state.size() != (Eigen::Index{1} << l)) {
    throw DimensionError("state of size " + std::to_string(state.size()) +
                         " is not a " + std::to_string(l) + "-qubit vector");
  }
  const double norm2 = state.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-8) {
    throw InputError("state is not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
  }
  return std::norm(state[0]) + std::norm(state[state.size() - 1]);
}

double commutation_check(const Operator& a, const Operator& b, int iterations,
                         std::uint64_t seed) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("operator sizes differ");
  const auto dim = static_cast<Eigen::Index>(a.dimension());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
  v.normalize();

  Eigen::VectorXcd av, bv, abv, bav;
  auto commutator = [&](const Eigen::VectorXcd& in) {
    a.apply(in, av);
    b.apply(in, bv);
    a.apply(bv, abv);
    b.apply(av, bav);
    return Eigen::VectorXcd(abv - bav);
  };

  // For Hermitian A and B the commutator C is anti-Hermitian, so the Gram
  // operator C^dagger C equals -C C.
  double estimate = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const Eigen::VectorXcd w = commutator(v);
    const double norm = w.norm();
    const double previous = estimate;
    estimate = std::max(estimate, norm);
    if (norm < 1e-14) break;
    Eigen::VectorXcd next = -commutator(w);
    const double next_norm = next.norm();
    if (next_norm == 0.0) break;
    v = next / next_norm;
    if (it > 5 && std::abs(estimate - previous) <= 1e-10 * estimate) break;
  }
  return estimate;
}

double commutation_check(const OperatorSpec& a, const OperatorSpec& b, int iterations,
                         std::uint64_t seed) {
  return commutation_check(Operator(a), Operator(b), iterations, seed);
}

ParitySectorGap parity_sector_gap(const DriverSpec& driver, int l) {
  if (l > kMaxChainLength) {
    throw ResourceError("chain length " + std::to_string(l) + " exceeds the bound of " +
                        std::to_string(kMaxChainLength));
  }
  const Operator h(chain_driver(driver, l));
  std::vector<int> all(l);
  for (int i = 0; i < l; ++i) all[i] = i;
  const Operator parity(x_string(l, all));

  ParitySectorGap out;
  out.commutator_norm = commutation_check(h, parity);
  if (out.commutator_norm > kParityCommutatorBound) {
    throw ValidationError("driver does not conserve chain parity (commutator norm " +
                          std::to_string(out.commutator_norm) + ")");
  }
  EigenOptions opt;
  opt.sector = Sector::even(l);
  const GapResult gap = distinct_gap(h, opt);
  out.gap = gap.gap;
  out.ground_energy = gap.ground_energy;
  return out;
}

}  // namespace trianneal
