#include "vqcnet/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vqcnet/rng.hpp"

namespace vqcnet {

StateVector StateVector::zero_state(int num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("num_qubits must be >= 1");
  StateVector s;
  s.num_qubits = num_qubits;
  s.amplitudes.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  s.amplitudes[0] = Amplitude{1.0, 0.0};
  return s;
}

double StateVector::norm_sq() const {
  double n = 0.0;
  for (const auto& a : amplitudes) n += std::norm(a);
  return n;
}

namespace {

void check_index(int q, int num_qubits, const char* role) {
  if (q < 0 || q >= num_qubits) {
    throw std::out_of_range(std::string(role) + " qubit index " +
                            std::to_string(q) + " out of range for " +
                            std::to_string(num_qubits) + " qubits");
  }
}

}  // namespace

StateVector apply_gate(const StateVector& state, const Gate& gate) {
  StateVector out = state;
  if (const auto* ry = std::get_if<RyGate>(&gate)) {
    check_index(ry->target, state.num_qubits, "RY target");
    const double c = std::cos(ry->angle / 2.0);
    const double s = std::sin(ry->angle / 2.0);
    const std::size_t bit = std::size_t{1} << ry->target;
    for (std::size_t k = 0; k < out.amplitudes.size(); ++k) {
      if (k & bit) continue;
      const Amplitude a0 = out.amplitudes[k];
      const Amplitude a1 = out.amplitudes[k | bit];
      out.amplitudes[k] = c * a0 - s * a1;
      out.amplitudes[k | bit] = s * a0 + c * a1;
    }
  } else {
    const auto& cx = std::get<CxGate>(gate);
    check_index(cx.control, state.num_qubits, "CX control");
    check_index(cx.target, state.num_qubits, "CX target");
    if (cx.control == cx.target) {
      throw std::out_of_range("CX control equals target");
    }
    const std::size_t cbit = std::size_t{1} << cx.control;
    const std::size_t tbit = std::size_t{1} << cx.target;
    for (std::size_t k = 0; k < out.amplitudes.size(); ++k) {
      if ((k & cbit) && !(k & tbit)) {
        std::swap(out.amplitudes[k], out.amplitudes[k | tbit]);
      }
    }
  }
  return out;
}

StateVector run_circuit(const Circuit& circuit) {
  StateVector state = StateVector::zero_state(circuit.num_qubits);
  for (const auto& g : circuit.gates) state = apply_gate(state, g);
  return state;
}

double parity_expectation_exact(const StateVector& state) {
  double e = 0.0;
  for (std::size_t k = 0; k < state.amplitudes.size(); ++k) {
    const double p = std::norm(state.amplitudes[k]);
    e += (std::popcount(k) & 1) ? -p : p;
  }
  return e;
}

double parity_expectation_sampled(const StateVector& state, int shots,
                                  std::uint64_t rng_seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  std::vector<double> cdf(state.amplitudes.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < cdf.size(); ++k) {
    acc += std::norm(state.amplitudes[k]);
    cdf[k] = acc;
  }
  Rng rng(rng_seed);
  long sum = 0;
  for (int s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    std::size_t k = std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    if (k >= cdf.size()) k = cdf.size() - 1;
    sum += (std::popcount(k) & 1) ? -1 : 1;
  }
  return static_cast<double>(sum) / shots;
}

}  // namespace vqcnet
