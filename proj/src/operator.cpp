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

#include "trianneal/operator.hpp"

#include <bit>
#include <type_traits>
#include <string>

#include "trianneal/error.hpp"
#include "trianneal/parallel.hpp"

namespace trianneal {

OperatorSpec& OperatorSpec::add(std::map<int, Pauli> sites, double coefficient) {
  terms.push_back({std::move(sites), coefficient});
  return *this;
}

void OperatorSpec::validate() const {
  if (n_qubits < 1) throw InputError("operator needs at least one qubit");
  for (const auto& t : terms) {
    for (const auto& [q, p] : t.sites) {
      if (q < 0 || q >= n_qubits) {
        throw InputError("Pauli site " + std::to_string(q) + " outside [0, " +
                         std::to_string(n_qubits) + ")");
      }
    }
  }
}

OperatorSpec operator+(const OperatorSpec& a, const OperatorSpec& b) {
  if (a.n_qubits != b.n_qubits) throw DimensionError("operator sizes differ");
  OperatorSpec out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

OperatorSpec operator*(double s, const OperatorSpec& a) {
  OperatorSpec out = a;
  for (auto& t : out.terms) t.coefficient *= s;
  return out;
}

OperatorSpec ising_operator(const LogicalIsing& model) {
  OperatorSpec spec(model.size());
  for (const auto& [i, h] : model.fields()) {
    if (h != 0.0) spec.z(i, h);
  }
  for (const auto& [edge, j] : model.couplings()) {
    if (j != 0.0) spec.zz(edge.first, edge.second, j);
  }
  return spec;
}

OperatorSpec standard_driver(int n_qubits) {
  OperatorSpec spec(n_qubits);
  for (int q = 0; q < n_qubits; ++q) spec.x(q, -1.0);
  return spec;
}

OperatorSpec x_string(int n_qubits, const std::vector<int>& sites) {
  OperatorSpec spec(n_qubits);
  std::map<int, Pauli> word;
  for (int q : sites) word[q] = Pauli::X;
  spec.add(std::move(word), 1.0);
  return spec;
}

// ---------------------------------------------------------------------------

namespace {

inline double parity_sign(std::uint64_t bits) {
  return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

Operator::Operator(const OperatorSpec& spec) {
  spec.validate();
  if (spec.n_qubits > kMaxMatrixFreeQubits) {
    throw ResourceError("operator on " + std::to_string(spec.n_qubits) +
                        " qubits exceeds the matrix-free bound of " +
                        std::to_string(kMaxMatrixFreeQubits));
  }
  n_ = spec.n_qubits;
  dim_ = std::size_t{1} << n_;
  diag_.assign(dim_, 0.0);

  std::map<std::uint64_t, std::map<std::uint64_t, Complex>> grouped;
  for (const auto& term : spec.terms) {
    std::uint64_t x = 0, y = 0, z = 0;
    for (const auto& [q, p] : term.sites) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      switch (p) {
        case Pauli::X:
          x |= bit;
          break;
        case Pauli::Y:
          y |= bit;
          break;
        case Pauli::Z:
          z |= bit;
          break;
      }
    }
    const std::uint64_t flip = x | y;
    const std::uint64_t sign = y | z;
    const Complex c = term.coefficient * kIPowers[std::popcount(y) % 4];
    if (flip == 0) {
      for (std::size_t b = 0; b < dim_; ++b) diag_[b] += c.real() * parity_sign(b & sign);
    } else {
      grouped[flip][sign] += c;
    }
  }
  for (const auto& [flip, phases] : grouped) {
    FlipGroup g{flip, {}};
    for (const auto& [sign, c] : phases) {
      if (c == Complex{}) continue;
      g.phases.push_back({sign, c});
      if (c.imag() != 0.0) real_ = false;
    }
    if (!g.phases.empty()) groups_.push_back(std::move(g));
  }
}

Operator Operator::combine(double a, const Operator& A, double b, const Operator& B) {
  if (A.n_ != B.n_) throw DimensionError("cannot combine operators of different size");
  Operator out;
  out.n_ = A.n_;
  out.dim_ = A.dim_;
  out.real_ = A.real_ && B.real_;
  out.diag_.resize(out.dim_);
  for (std::size_t i = 0; i < out.dim_; ++i) out.diag_[i] = a * A.diag_[i] + b * B.diag_[i];

  std::map<std::uint64_t, std::map<std::uint64_t, Complex>> grouped;
  for (const auto& g : A.groups_) {
    for (const auto& p : g.phases) grouped[g.flip][p.sign_mask] += a * p.coefficient;
  }
  for (const auto& g : B.groups_) {
    for (const auto& p : g.phases) grouped[g.flip][p.sign_mask] += b * p.coefficient;
  }
  for (const auto& [flip, phases] : grouped) {
    FlipGroup g{flip, {}};
    for (const auto& [sign, c] : phases) {
      if (c != Complex{}) g.phases.push_back({sign, c});
    }
    if (!g.phases.empty()) out.groups_.push_back(std::move(g));
  }
  return out;
}

template <class Scalar>
void Operator::apply_impl(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& in,
                          Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& out) const {
  if (static_cast<std::size_t>(in.size()) != dim_) {
    throw DimensionError("vector of size " + std::to_string(in.size()) +
                         " applied to operator of dimension " + std::to_string(dim_));
  }
  out.resize(static_cast<Eigen::Index>(dim_));
  auto kernel = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      Scalar v = diag_[t] * in[t];
      for (const auto& g : groups_) {
        const std::size_t source = t ^ g.flip;
        const Scalar x = in[source];
        for (const auto& p : g.phases) {
          const double s = parity_sign(source & p.sign_mask);
          if constexpr (std::is_same_v<Scalar, double>) {
            v += s * p.coefficient.real() * x;
          } else {
            v += s * p.coefficient * x;
          }
        }
      }
      out[t] = v;
    }
  };
  constexpr std::size_t kChunk = std::size_t{1} << 14;
  if (dim_ <= kChunk) {
    kernel(0, dim_);
    return;
  }
  parallel_for(dim_ / kChunk, [&](std::size_t c) { kernel(c * kChunk, (c + 1) * kChunk); });
}

void Operator::apply(const Eigen::VectorXd& in, Eigen::VectorXd& out) const {
  if (!real_) throw NumericalError("complex operator applied to a real vector");
  apply_impl(in, out);
}

void Operator::apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
  apply_impl(in, out);
}

Eigen::MatrixXcd Operator::dense() const {
  if (n_ > kMaxDenseQubits) {
    throw ResourceError("dense matrix on " + std::to_string(n_) +
                        " qubits exceeds the bound of " + std::to_string(kMaxDenseQubits));
  }
  const auto dim = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t b = 0; b < dim_; ++b) {
    m(b, b) += diag_[b];
    for (const auto& g : groups_) {
      for (const auto& p : g.phases) {
        m(b ^ g.flip, b) += parity_sign(b & p.sign_mask) * p.coefficient;
      }
    }
  }
  return m;
}

}  // namespace trianneal
