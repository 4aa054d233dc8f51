#pragma once

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

namespace vqcnet {

using Amplitude = std::complex<double>;

// Dense statevector over d qubits. Qubit i maps to bit i of the basis-state
// index (bit 0 least significant).
struct StateVector {
  int num_qubits = 0;
  std::vector<Amplitude> amplitudes;

  static StateVector zero_state(int num_qubits);

  double norm_sq() const;
};

struct RyGate {
  int target;
  double angle;  // radians
};

struct CxGate {
  int control;
  int target;
};

using Gate = std::variant<RyGate, CxGate>;

struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  void push_ry(int target, double angle) { gates.push_back(RyGate{target, angle}); }
  void push_cx(int control, int target) { gates.push_back(CxGate{control, target}); }
};

// Applies one gate and returns the new state. RY(theta) on the target is
// [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]; CX flips the target bit
// where the control bit is set. Throws std::out_of_range on bad indices.
StateVector apply_gate(const StateVector& state, const Gate& gate);

// Runs a circuit from |0...0>.
StateVector run_circuit(const Circuit& circuit);

// <Z^(x)d> = sum_k (-1)^popcount(k) |amp_k|^2. Odd-parity basis states carry
// eigenvalue -1.
double parity_expectation_exact(const StateVector& state);

// Estimates the parity expectation from `shots` basis-state samples.
// Deterministic for a given seed. Throws std::invalid_argument on shots = 0.
double parity_expectation_sampled(const StateVector& state, int shots,
                                  std::uint64_t rng_seed);

}  // namespace vqcnet
