#include "vqcnet/circuits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vqcnet {

namespace {

Circuit encoding_circuit(std::span<const double> x) {
  Circuit c;
  c.num_qubits = static_cast<int>(x.size());
  for (int i = 0; i < c.num_qubits; ++i) c.push_ry(i, x[i]);
  return c;
}

void append_ansatz(Circuit& c, std::span<const double> theta, int repetitions) {
  const int d = c.num_qubits;
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (static_cast<int>(theta.size()) != d * (repetitions + 1)) {
    throw std::invalid_argument(
        "ansatz parameter count mismatch: got " + std::to_string(theta.size()) +
        ", expected " + std::to_string(d * (repetitions + 1)));
  }
  std::size_t p = 0;
  for (int i = 0; i < d; ++i) c.push_ry(i, theta[p++]);
  for (int rep = 0; rep < repetitions; ++rep) {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) c.push_cx(i, j);
    for (int i = 0; i < d; ++i) c.push_ry(i, theta[p++]);
  }
}

double evaluate(const Circuit& circuit, const EvalMode& mode) {
  const StateVector state = run_circuit(circuit);
  if (mode.sampled) {
    return parity_expectation_sampled(state, mode.shots, mode.seed);
  }
  return parity_expectation_exact(state);
}

}  // namespace

Circuit build_feature_map(std::span<const double> x) {
  if (x.empty()) throw std::domain_error("feature vector is empty");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0 && x[i] <= std::numbers::pi)) {
      throw std::domain_error("feature " + std::to_string(i) + " = " +
                              std::to_string(x[i]) + " outside [0, pi]");
    }
  }
  return encoding_circuit(x);
}

Circuit build_ansatz(int num_qubits, std::span<const double> theta) {
  return build_ansatz_reps(num_qubits, theta, 1);
}

Circuit build_ansatz_reps(int num_qubits, std::span<const double> theta,
                          int repetitions) {
  if (num_qubits < 1) throw std::invalid_argument("num_qubits must be >= 1");
  Circuit c;
  c.num_qubits = num_qubits;
  append_ansatz(c, theta, repetitions);
  return c;
}

double vqc_expectation(std::span<const double> x, std::span<const double> theta,
                       const EvalMode& mode) {
  Circuit c = build_feature_map(x);
  append_ansatz(c, theta, 1);
  return evaluate(c, mode);
}

double vqc_expectation_any_angle(std::span<const double> x,
                                 std::span<const double> theta,
                                 const EvalMode& mode) {
  if (x.empty()) throw std::domain_error("feature vector is empty");
  Circuit c = encoding_circuit(x);
  append_ansatz(c, theta, 1);
  return evaluate(c, mode);
}

}  // namespace vqcnet
