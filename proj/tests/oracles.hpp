// Test-only reference implementations, kept independent of the simulation
// path they check: circuits are evaluated by explicit dense matrix products,
// gradients by central finite differences of the cost.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "vqcnet/models.hpp"
#include "vqcnet/simulator.hpp"

namespace vqcnet::testing {

using Matrix = std::vector<std::vector<std::complex<double>>>;

inline Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<std::complex<double>>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Matrix gate_matrix(const Gate& gate, int num_qubits) {
  const std::size_t n = std::size_t{1} << num_qubits;
  Matrix m(n, std::vector<std::complex<double>>(n, 0.0));
  if (const auto* ry = std::get_if<RyGate>(&gate)) {
    const double c = std::cos(ry->angle / 2.0);
    const double s = std::sin(ry->angle / 2.0);
    const std::size_t bit = std::size_t{1} << ry->target;
    for (std::size_t col = 0; col < n; ++col) {
      if (col & bit) {
        m[col ^ bit][col] = -s;
        m[col][col] = c;
      } else {
        m[col][col] = c;
        m[col | bit][col] = s;
      }
    }
  } else {
    const auto& cx = std::get<CxGate>(gate);
    const std::size_t cbit = std::size_t{1} << cx.control;
    const std::size_t tbit = std::size_t{1} << cx.target;
    for (std::size_t col = 0; col < n; ++col) {
      m[(col & cbit) ? (col ^ tbit) : col][col] = 1.0;
    }
  }
  return m;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<std::complex<double>>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Full unitary of the circuit as an explicit matrix product, applied to
// |0...0>.
inline std::vector<std::complex<double>> run_circuit_oracle(const Circuit& c) {
  const std::size_t n = std::size_t{1} << c.num_qubits;
  Matrix u = identity_matrix(n);
  for (const auto& g : c.gates) u = matmul(gate_matrix(g, c.num_qubits), u);
  std::vector<std::complex<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = u[i][0];
  return out;
}

inline double central_difference(const std::function<double(double)>& f,
                                 double x, double step = 1e-5) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

// Finite-difference gradient of nll_cost over all flat model parameters.
inline std::vector<double> finite_diff_grad(const Model& model,
                                            const LabeledDataset& batch,
                                            double step = 1e-5) {
  std::vector<double> params = model_flat_params(model);
  std::vector<double> grad(params.size());
  Model probe = model;
  for (std::size_t k = 0; k < params.size(); ++k) {
    grad[k] = central_difference(
        [&](double v) {
          std::vector<double> p = params;
          p[k] = v;
          model_set_flat_params(probe, p);
          return nll_cost(probe, batch);
        },
        params[k], step);
  }
  return grad;
}

}  // namespace vqcnet::testing
