// Copyright 2026 The qisd authors
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

#include "qisd/randbench.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qisd/parallel.hpp"
#include "qisd/pulse.hpp"

namespace qisd {

NoiseModel NoiseModel::depolarizing(double p_sqisw, double p_iswap,
                                    double p_single_rate) {
  NoiseModel m;
  m.p_two_qubit["SQiSW"] = p_sqisw;
  m.p_two_qubit["iSWAP"] = p_iswap;
  m.p_single = p_single_rate;
  return m;
}

double NoiseModel::two_qubit_rate(const std::string& name) const {
  const auto it = p_two_qubit.find(name);
  if (it == p_two_qubit.end())
    throw std::invalid_argument("no two-qubit rate for instruction " + name);
  return it->second;
}

namespace {

// rho -> (1-p) rho + (p/3) sum_P P rho P on one qubit of an n-qubit state
void depolarize_qubit(DensityMatrix& rho, int n, int q, double p) {
  if (p == 0.0) return;
  static const Matrix2 paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
  DensityMatrix out = (1.0 - p) * rho;
  for (int k = 0; k < 3; ++k) {
    MatrixX pk = MatrixX::Identity(1, 1);
    for (int j = 0; j < n; ++j)
      pk = kron(pk, j == q ? MatrixX(paulis[k]) : MatrixX(Matrix2::Identity()));
    out += (p / 3.0) * pk * rho * pk;
  }
  rho = std::move(out);
}

}  // namespace

DensityMatrix simulate_noisy(const GateCircuit& c, const NoiseModel& noise,
                             int initial_basis_state) {
  if (c.qubits > 6) throw std::invalid_argument("too large");
  const Eigen::Index dim = Eigen::Index(1) << c.qubits;
  if (initial_basis_state < 0 || initial_basis_state >= dim)
    throw std::invalid_argument("bad initial state");
  DensityMatrix rho = DensityMatrix::Zero(dim, dim);
  rho(initial_basis_state, initial_basis_state) = 1.0;
  for (const auto& l : c.layers) {
    if (l.kind == GateCircuit::Layer::Kind::Local) {
      MatrixX layer = MatrixX::Identity(1, 1);
      for (int q = 0; q < c.qubits; ++q) layer = kron(layer, l.gates[q]);
      rho = layer * rho * layer.adjoint();
      for (int q = 0; q < c.qubits; ++q)
        if (!l.gates[q].isIdentity(0.0))
          depolarize_qubit(rho, c.qubits, q, noise.p_single);
    } else {
      const MatrixX u = embed_two_qubit(named_gate(l.name), c.qubits, l.t0, l.t1);
      rho = u * rho * u.adjoint();
      const double p = noise.two_qubit_rate(l.name);
      depolarize_qubit(rho, c.qubits, l.t0, p);
      depolarize_qubit(rho, c.qubits, l.t1, p);
    }
  }
  return rho;
}

double born_probability(const DensityMatrix& rho, int basis_state) {
  return rho(basis_state, basis_state).real();
}

namespace {

std::string backend_instruction(Backend b) {
  return b == Backend::SQiSW ? "SQiSW" : "iSWAP";
}

// Sequence builder shared by the raw-instruction and compiled-circuit
// interleaving paths.
GateCircuit build_sequence(int m, const GateCircuit* interleaved_block,
                           const Matrix4* interleaved_unitary,
                           Backend backend, RngStream& rng) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  GateCircuit seq;
  seq.qubits = 2;
  Matrix4 total = Matrix4::Identity();
  for (int i = 0; i < m - 1; ++i) {
    const Matrix4 u = haar_su4(rng);
    const GateCircuit block = decompose(u, backend);
    for (const auto& l : block.layers) seq.layers.push_back(l);
    total = u * total;
    if (interleaved_block != nullptr) {
      for (const auto& l : interleaved_block->layers) seq.layers.push_back(l);
      total = (*interleaved_unitary) * total;
    }
  }
  const GateCircuit recovery = decompose(Matrix4(total.adjoint()), backend);
  for (const auto& l : recovery.layers) seq.layers.push_back(l);
  return seq;
}

}  // namespace

GateCircuit gen_rand_seq(int m, std::optional<std::string> interleave,
                         Backend backend, RngStream& rng) {
  if (!interleave.has_value())
    return build_sequence(m, nullptr, nullptr, backend, rng);
  GateCircuit block;
  block.qubits = 2;
  block.add_two_qubit(*interleave, 0, 1);
  const Matrix4 t = named_gate(*interleave);
  return build_sequence(m, &block, &t, backend, rng);
}

DecayFit fit_decay(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 4)
    throw std::invalid_argument("need at least 4 decay points");
  {
    std::vector<double> ms;
    for (const auto& p : points) ms.push_back(p.first);
    std::sort(ms.begin(), ms.end());
    if (std::adjacent_find(ms.begin(), ms.end()) != ms.end())
      throw std::invalid_argument("need distinct sequence lengths");
  }
  double pmin = points[0].second, pmax = points[0].second;
  for (const auto& p : points) {
    pmin = std::min(pmin, p.second);
    pmax = std::max(pmax, p.second);
  }
  if (pmax - pmin < 1e-12) throw std::invalid_argument("degenerate decay");

  const auto sse_for = [&](double u, double& a_out, double& b_out) {
    // linear solve for (A, B) at fixed u
    double s_ff = 0, s_f1 = 0, s_11 = 0, s_fy = 0, s_1y = 0;
    for (const auto& p : points) {
      const double f = std::pow(u, p.first);
      s_ff += f * f;
      s_f1 += f;
      s_11 += 1;
      s_fy += f * p.second;
      s_1y += p.second;
    }
    const double det = s_ff * s_11 - s_f1 * s_f1;
    if (std::abs(det) < 1e-15) {
      a_out = 0;
      b_out = s_1y / s_11;
    } else {
      a_out = (s_fy * s_11 - s_f1 * s_1y) / det;
      b_out = (s_ff * s_1y - s_f1 * s_fy) / det;
    }
    double sse = 0;
    for (const auto& p : points) {
      const double r = a_out * std::pow(u, p.first) + b_out - p.second;
      sse += r * r;
    }
    return sse;
  };

  DecayFit best;
  double best_sse = 1e300;
  for (int i = 1; i < 4000; ++i) {
    const double u = i / 4000.0;
    double a, b;
    const double sse = sse_for(u, a, b);
    if (sse < best_sse) {
      best_sse = sse;
      best = {a, u, b, 0.0};
    }
  }
  // Gauss-Newton refinement on (A, u, B)
  for (int it = 0; it < 80; ++it) {
    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
    for (const auto& p : points) {
      const double um = std::pow(best.u, p.first);
      const double r = p.second - (best.A * um + best.B);
      Eigen::Vector3d j;
      j << um, best.A * p.first * std::pow(best.u, p.first - 1), 1.0;
      jtj += j * j.transpose();
      jtr += j * r;
    }
    const Eigen::Vector3d step = jtj.ldlt().solve(jtr);
    best.A += step(0);
    best.u += step(1);
    best.B += step(2);
    if (step.cwiseAbs().maxCoeff() < 1e-14) break;
  }
  double sse = 0;
  for (const auto& p : points) {
    const double r = best.A * std::pow(best.u, p.first) + best.B - p.second;
    sse += r * r;
  }
  best.residual = std::sqrt(sse / static_cast<double>(points.size()));
  return best;
}

double frb_fidelity(double u, int d) {
  return 1.0 - (1.0 - u) * (d - 1.0) / d;
}

double ifrb_target_fidelity(double u_ref, double u_int, int d) {
  if (u_ref <= 0) throw std::invalid_argument("u_ref must be positive");
  return 1.0 - (1.0 - u_int / u_ref) * (d - 1.0) / d;
}

std::vector<int> default_frb_lengths() {
  return {1, 2, 4, 6, 8, 12, 16, 24, 32};
}

namespace {

FrbCurve run_frb_impl(const std::vector<int>& lengths,
                      int sequences_per_length,
                      const GateCircuit* interleaved_block,
                      const Matrix4* interleaved_unitary, Backend backend,
                      const NoiseModel& noise, RngStream rng, int threads) {
  const std::int64_t total =
      static_cast<std::int64_t>(lengths.size()) * sequences_per_length;
  std::vector<double> survival(total);
  parallel_for(total, threads, [&](std::int64_t idx) {
    const int li = static_cast<int>(idx / sequences_per_length);
    RngStream s = rng.substream(static_cast<std::uint64_t>(idx));
    const GateCircuit seq = build_sequence(lengths[li], interleaved_block,
                                           interleaved_unitary, backend, s);
    const DensityMatrix rho = simulate_noisy(seq, noise, 0);
    survival[idx] = born_probability(rho, 0);
  });
  FrbCurve out;
  out.lengths = lengths;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t li = 0; li < lengths.size(); ++li) {
    double mean = 0;
    for (int si = 0; si < sequences_per_length; ++si)
      mean += survival[li * sequences_per_length + si];
    mean /= sequences_per_length;
    double var = 0;
    for (int si = 0; si < sequences_per_length; ++si) {
      const double d = survival[li * sequences_per_length + si] - mean;
      var += d * d;
    }
    var /= std::max(1, sequences_per_length - 1);
    out.mean_survival.push_back(mean);
    out.stderr_.push_back(std::sqrt(var / sequences_per_length));
    pts.emplace_back(lengths[li], mean);
  }
  out.fit = fit_decay(pts);
  return out;
}

}  // namespace

FrbCurve run_frb(const std::vector<int>& lengths, int sequences_per_length,
                 std::optional<std::string> interleave, Backend backend,
                 const NoiseModel& noise, RngStream rng, int threads) {
  if (!interleave.has_value())
    return run_frb_impl(lengths, sequences_per_length, nullptr, nullptr,
                        backend, noise, rng, threads);
  GateCircuit block;
  block.qubits = 2;
  block.add_two_qubit(*interleave, 0, 1);
  const Matrix4 t = named_gate(*interleave);
  return run_frb_impl(lengths, sequences_per_length, &block, &t, backend,
                      noise, rng, threads);
}

double depolarized_instruction_fidelity(const std::string& name,
                                        const NoiseModel& noise) {
  const Matrix4 u = named_gate(name);
  const double p = noise.two_qubit_rate(name);
  static const Matrix2 paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
  const auto channel = [&](const Matrix4& rho) {
    Matrix4 out = u * rho * u.adjoint();
    for (int q = 0; q < 2; ++q) {
      Matrix4 dep = (1.0 - p) * out;
      for (const auto& pm : paulis) {
        const Matrix4 full = q == 0 ? kron2(pm, Matrix2::Identity())
                                    : kron2(Matrix2::Identity(), pm);
        dep += (p / 3.0) * full * out * full;
      }
      out = dep;
    }
    return out;
  };
  return channel_process_fidelity(channel, u).F_avg;
}

// ---------------- quantum volume ----------------

namespace {

std::vector<int> random_permutation(int d, RngStream& rng) {
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = d - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// adjacent transpositions (i, i+1) that sort `arr` ascending; applying the
// corresponding SWAP gates in order realizes the permutation that maps
// wire content arr to identity order
std::vector<int> bubble_sort_swaps(std::vector<int> arr) {
  std::vector<int> swaps;
  const int n = static_cast<int>(arr.size());
  for (int pass = 0; pass < n; ++pass)
    for (int i = 0; i + 1 < n; ++i)
      if (arr[i] > arr[i + 1]) {
        std::swap(arr[i], arr[i + 1]);
        swaps.push_back(i);
      }
  return swaps;
}

struct QvLayer {
  std::vector<int> perm;          // wire -> logical qubit placed there
  std::vector<Matrix4> gates;     // floor(d/2) Haar SU(4) blocks
};

struct CompiledQv {
  GateCircuit circuit;
  std::vector<int> content;  // content[w] = logical qubit read out on wire w
};

std::vector<QvLayer> make_model_circuit(int d, RngStream& rng) {
  std::vector<QvLayer> layers(d);
  for (int k = 0; k < d; ++k) {
    layers[k].perm = random_permutation(d, rng);
    for (int j = 0; j < d / 2; ++j) layers[k].gates.push_back(haar_su4(rng));
  }
  return layers;
}

// Ideal statevector: per layer apply the SU(4) blocks on the permuted
// pairs (perm[2j], perm[2j+1]).
std::vector<double> ideal_probabilities(int d,
                                        const std::vector<QvLayer>& layers) {
  VectorX state = VectorX::Zero(Eigen::Index(1) << d);
  state(0) = 1.0;
  for (const auto& layer : layers)
    for (int j = 0; j < d / 2; ++j)
      apply_two_qubit_gate(state, layer.gates[j], d, layer.perm[2 * j],
                           layer.perm[2 * j + 1]);
  std::vector<double> probs(state.size());
  for (Eigen::Index i = 0; i < state.size(); ++i) probs[i] = std::norm(state(i));
  return probs;
}

CompiledQv compiled_qv_circuit(int d, const std::vector<QvLayer>& layers,
                               Backend backend, Connectivity connectivity) {
  CompiledQv out;
  out.circuit.qubits = d;
  out.content.resize(d);
  std::iota(out.content.begin(), out.content.end(), 0);
  if (connectivity == Connectivity::Complete) {
    for (const auto& layer : layers)
      for (int j = 0; j < d / 2; ++j)
        append_embedded(out.circuit, decompose(layer.gates[j], backend),
                        layer.perm[2 * j], layer.perm[2 * j + 1]);
    return out;
  }
  // chain: route logical qubits with adjacent SWAPs so each block's pair
  // sits on neighboring wires; readout is relabeled through `content`
  const GateCircuit swap_block = decompose(named_gate("SWAP"), backend);
  std::vector<int>& content = out.content;  // content[w] = logical on wire w
  for (const auto& layer : layers) {
    // want logical layer.perm[w] on wire w
    std::vector<int> rank_of_logical(d);
    for (int w = 0; w < d; ++w) rank_of_logical[layer.perm[w]] = w;
    std::vector<int> keys(d);
    for (int w = 0; w < d; ++w) keys[w] = rank_of_logical[content[w]];
    for (int sw : bubble_sort_swaps(keys)) {
      append_embedded(out.circuit, swap_block, sw, sw + 1);
      std::swap(content[sw], content[sw + 1]);
    }
    for (int j = 0; j < d / 2; ++j)
      append_embedded(out.circuit, decompose(layer.gates[j], backend), 2 * j,
                      2 * j + 1);
  }
  return out;
}

// wire-basis index of the logical basis state x given the wire contents
int wire_index_of(int x, const std::vector<int>& content, int d) {
  int y = 0;
  for (int w = 0; w < d; ++w) {
    const int bit = (x >> (d - 1 - content[w])) & 1;
    y |= bit << (d - 1 - w);
  }
  return y;
}

}  // namespace

QvResult quantum_volume_run(int d, int num_circuits, const NoiseModel& noise,
                            Backend backend, Connectivity connectivity,
                            RngStream rng, int threads) {
  if (d < 2 || d > 5) throw std::invalid_argument("d out of range");
  if (num_circuits < 1) throw std::invalid_argument("need circuits");
  std::vector<double> heavy_mass(num_circuits);
  parallel_for(num_circuits, threads, [&](std::int64_t ci) {
    RngStream s = rng.substream(static_cast<std::uint64_t>(ci));
    const auto layers = make_model_circuit(d, s);
    const auto probs = ideal_probabilities(d, layers);
    std::vector<double> sorted = probs;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t half = sorted.size() / 2;
    const double p_med = (sorted[half - 1] + sorted[half]) / 2.0;
    const CompiledQv compiled =
        compiled_qv_circuit(d, layers, backend, connectivity);
    const DensityMatrix rho = simulate_noisy(compiled.circuit, noise, 0);
    double h = 0;
    for (std::size_t x = 0; x < probs.size(); ++x)
      if (probs[x] > p_med)
        h += born_probability(
            rho, wire_index_of(static_cast<int>(x), compiled.content, d));
    heavy_mass[ci] = h;
  });
  QvResult out;
  out.d = d;
  out.num_circuits = num_circuits;
  out.h_d = std::accumulate(heavy_mass.begin(), heavy_mass.end(), 0.0) /
            num_circuits;
  out.passed = out.h_d > 2.0 / 3.0;
  return out;
}

// ---------------- Weyl sweep ----------------

std::vector<InteractionCoeffs> default_sweep_grid() {
  std::vector<InteractionCoeffs> grid;
  const double dx = kPi / 20, dyz = kPi / 12;
  for (int ix = 1; ix <= 5; ++ix) {
    const double x = ix * dx;
    for (int iy = 0; iy * dyz <= x + 1e-12; ++iy) {
      const double y = iy * dyz;
      for (int iz = -iy; iz <= iy; ++iz) {
        const double z = iz * dyz;
        InteractionCoeffs p{x, y, z};
        if (!p.is_canonical(1e-12)) continue;
        grid.push_back(p);
      }
    }
  }
  return grid;
}

std::vector<SweepPoint> frb_weyl_sweep(
    const std::vector<InteractionCoeffs>& grid, const NoiseModel& noise,
    Backend backend, RngStream rng, int sequences_per_length, int threads) {
  const std::vector<int> lengths = default_frb_lengths();
  // shared reference decay
  const FrbCurve ref = run_frb(lengths, sequences_per_length, std::nullopt,
                               backend, noise, rng.substream(0), threads);
  std::vector<SweepPoint> out(grid.size());
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    RngStream s = rng.substream(gi + 1);
    // random local dressing around the canonical gate
    const Matrix2 l1 = haar_su2(s), l2 = haar_su2(s);
    const Matrix2 r1 = haar_su2(s), r2 = haar_su2(s);
    const Matrix4 target =
        kron2(l1, l2) * canonical_gate(grid[gi]) * kron2(r1, r2);
    const GateCircuit block = decompose(target, backend);
    const Matrix4 ideal = Matrix4(circuit_to_unitary(block));
    const FrbCurve curve = run_frb_impl(lengths, sequences_per_length, &block,
                                        &ideal, backend, noise,
                                        s.substream(1), threads);
    SweepPoint pt;
    pt.coords = grid[gi];
    pt.fidelity = ifrb_target_fidelity(ref.fit.u, curve.fit.u, 4);
    pt.error_rate = 1.0 - pt.fidelity;
    out[gi] = pt;
  }
  return out;
}

}  // namespace qisd
