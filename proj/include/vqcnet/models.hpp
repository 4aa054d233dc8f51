#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "vqcnet/circuits.hpp"
#include "vqcnet/data.hpp"

namespace vqcnet {

// Probabilities are clamped to [kProbFloor, 1] before logs and divisions;
// P reaches 0 exactly when the expectation saturates at +-1.
inline constexpr double kProbFloor = 1e-12;

// A single variational circuit classifier over `input_dim` qubits, 2d
// trainable angles.
struct VqcClassifier {
  int input_dim = 0;
  std::vector<double> theta;

  double output(std::span<const double> x,
                const EvalMode& mode = EvalMode::exact()) const {
    return vqc_expectation(x, theta, mode);
  }
};

// m hidden circuits over the input, outputs rescaled to [0, pi] and fed into
// one output circuit over m qubits. Flat parameter order: hidden circuit 0,
// hidden circuit 1, ..., output circuit.
struct HybridNetwork {
  int input_dim = 0;
  int hidden_count = 0;
  std::vector<VqcClassifier> hidden;
  VqcClassifier output_unit;

  static HybridNetwork make(int input_dim, int hidden_count,
                            std::span<const double> params);

  int param_count() const { return hidden_count * 2 * input_dim + 2 * hidden_count; }
  std::vector<double> flat_params() const;
  void set_flat_params(std::span<const double> params);

  double output(std::span<const double> x,
                const EvalMode& mode = EvalMode::exact()) const;
};

struct HnnForward {
  std::vector<double> h_prime;  // hidden expectations in [-1, 1]
  std::vector<double> h;        // rescaled to [0, pi]
  double z = 0.0;               // network output
};

HnnForward forward_hnn(const HybridNetwork& net, std::span<const double> x,
                       const EvalMode& mode = EvalMode::exact());

using Model = std::variant<VqcClassifier, HybridNetwork>;

double model_output(const Model& model, std::span<const double> x,
                    const EvalMode& mode = EvalMode::exact());
int model_param_count(const Model& model);
std::vector<double> model_flat_params(const Model& model);
void model_set_flat_params(Model& model, std::span<const double> params);

// P(y|x) = (y f + 1) / 2. y must be -1 or +1.
double predict_proba(double f, int y);
double predict_proba(const Model& model, std::span<const double> x, int y,
                     const EvalMode& mode = EvalMode::exact());

// +1 if f >= 0 else -1.
inline int predict_label_from_output(double f) { return f >= 0.0 ? +1 : -1; }
int predict_label(const Model& model, std::span<const double> x,
                  const EvalMode& mode = EvalMode::exact());

// -(1/N) sum ln P(y_i|x_i) with the clamp above.
double nll_cost(const Model& model, const LabeledDataset& ds,
                const EvalMode& mode = EvalMode::exact());

// (f(t + pi/2) - f(t - pi/2)) / 2, exact for RY rotation angles.
double param_shift_derivative(const std::function<double(double)>& eval,
                              double theta_i);

// Gradient of the clamped NLL over the batch, parameter-shift evaluations in
// exact mode.
std::vector<double> grad_vqc(const VqcClassifier& clf, const LabeledDataset& batch);
std::vector<double> grad_hnn(const HybridNetwork& net, const LabeledDataset& batch);
std::vector<double> model_grad(const Model& model, const LabeledDataset& batch);

}  // namespace vqcnet
