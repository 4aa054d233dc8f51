#pragma once

#include <cstdint>
#include <span>

#include "vqcnet/simulator.hpp"

namespace vqcnet {

// How circuit expectations are evaluated: exactly from the statevector, or
// estimated from a finite number of measurement shots.
struct EvalMode {
  bool sampled = false;
  int shots = 1024;
  std::uint64_t seed = 0;

  static EvalMode exact() { return {}; }
  static EvalMode sampled_shots(int shots, std::uint64_t seed) {
    return {true, shots, seed};
  }
};

// Angle-encoding feature map: RY(x_i) on qubit i, so P(|0>) = cos^2(x_i/2).
// Every feature must lie in [0, pi]; violations throw std::domain_error
// naming the offending index.
Circuit build_feature_map(std::span<const double> x);

// RealAmplitudes, one repetition, full entanglement: RY(theta_i) on each
// qubit, CX(i, j) for every pair i < j in lexicographic order (lower index
// controls), then RY(theta_{d+i}) on each qubit. Requires theta.size() == 2d.
Circuit build_ansatz(int num_qubits, std::span<const double> theta);

// Adds `repetitions` entangle+rotate rounds instead of one; the parameter
// vector must have d * (repetitions + 1) entries.
Circuit build_ansatz_reps(int num_qubits, std::span<const double> theta,
                          int repetitions);

// Parity expectation of feature map + ansatz from |0...0>.
double vqc_expectation(std::span<const double> x, std::span<const double> theta,
                       const EvalMode& mode = EvalMode::exact());

// Same evaluation without the [0, pi] domain check on x. Parameter-shift
// evaluations of encoding angles land outside the data domain and come
// through here.
double vqc_expectation_any_angle(std::span<const double> x,
                                 std::span<const double> theta,
                                 const EvalMode& mode = EvalMode::exact());

}  // namespace vqcnet
