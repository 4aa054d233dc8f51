#include "vqcnet/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vqcnet {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double clamp_proba(double p) { return std::clamp(p, kProbFloor, 1.0); }

void check_label(int y) {
  if (y != -1 && y != +1) {
    throw std::domain_error("label must be -1 or +1, got " + std::to_string(y));
  }
}

}  // namespace

HybridNetwork HybridNetwork::make(int input_dim, int hidden_count,
                                  std::span<const double> params) {
  if (input_dim < 1 || hidden_count < 1) {
    throw std::invalid_argument("hybrid network needs input_dim, hidden_count >= 1");
  }
  HybridNetwork net;
  net.input_dim = input_dim;
  net.hidden_count = hidden_count;
  net.hidden.resize(hidden_count);
  for (auto& h : net.hidden) {
    h.input_dim = input_dim;
    h.theta.assign(2 * input_dim, 0.0);
  }
  net.output_unit.input_dim = hidden_count;
  net.output_unit.theta.assign(2 * hidden_count, 0.0);
  if (!params.empty()) net.set_flat_params(params);
  return net;
}

std::vector<double> HybridNetwork::flat_params() const {
  std::vector<double> out;
  out.reserve(param_count());
  for (const auto& h : hidden) out.insert(out.end(), h.theta.begin(), h.theta.end());
  out.insert(out.end(), output_unit.theta.begin(), output_unit.theta.end());
  return out;
}

void HybridNetwork::set_flat_params(std::span<const double> params) {
  if (static_cast<int>(params.size()) != param_count()) {
    throw std::invalid_argument("parameter vector length " +
                                std::to_string(params.size()) + ", expected " +
                                std::to_string(param_count()));
  }
  std::size_t p = 0;
  for (auto& h : hidden) {
    std::copy_n(params.begin() + p, h.theta.size(), h.theta.begin());
    p += h.theta.size();
  }
  std::copy_n(params.begin() + p, output_unit.theta.size(),
              output_unit.theta.begin());
}

double HybridNetwork::output(std::span<const double> x,
                             const EvalMode& mode) const {
  return forward_hnn(*this, x, mode).z;
}

HnnForward forward_hnn(const HybridNetwork& net, std::span<const double> x,
                       const EvalMode& mode) {
  HnnForward fw;
  fw.h_prime.reserve(net.hidden_count);
  fw.h.reserve(net.hidden_count);
  for (const auto& unit : net.hidden) {
    const double hp = unit.output(x, mode);
    fw.h_prime.push_back(hp);
    fw.h.push_back(kHalfPi * (hp + 1.0));
  }
  fw.z = net.output_unit.output(fw.h, mode);
  return fw;
}

double model_output(const Model& model, std::span<const double> x,
                    const EvalMode& mode) {
  return std::visit([&](const auto& m) { return m.output(x, mode); }, model);
}

int model_param_count(const Model& model) {
  if (const auto* vqc = std::get_if<VqcClassifier>(&model)) {
    return static_cast<int>(vqc->theta.size());
  }
  return std::get<HybridNetwork>(model).param_count();
}

std::vector<double> model_flat_params(const Model& model) {
  if (const auto* vqc = std::get_if<VqcClassifier>(&model)) return vqc->theta;
  return std::get<HybridNetwork>(model).flat_params();
}

void model_set_flat_params(Model& model, std::span<const double> params) {
  if (auto* vqc = std::get_if<VqcClassifier>(&model)) {
    if (params.size() != vqc->theta.size()) {
      throw std::invalid_argument("parameter vector length mismatch");
    }
    vqc->theta.assign(params.begin(), params.end());
    return;
  }
  std::get<HybridNetwork>(model).set_flat_params(params);
}

double predict_proba(double f, int y) {
  check_label(y);
  return (y * f + 1.0) / 2.0;
}

double predict_proba(const Model& model, std::span<const double> x, int y,
                     const EvalMode& mode) {
  return predict_proba(model_output(model, x, mode), y);
}

int predict_label(const Model& model, std::span<const double> x,
                  const EvalMode& mode) {
  return predict_label_from_output(model_output(model, x, mode));
}

double nll_cost(const Model& model, const LabeledDataset& ds,
                const EvalMode& mode) {
  if (ds.points.empty()) throw std::invalid_argument("nll_cost on empty dataset");
  double sum = 0.0;
  for (const auto& p : ds.points) {
    sum += std::log(clamp_proba(predict_proba(model, p.features, p.label, mode)));
  }
  return -sum / static_cast<double>(ds.points.size());
}

double param_shift_derivative(const std::function<double(double)>& eval,
                              double theta_i) {
  return (eval(theta_i + kHalfPi) - eval(theta_i - kHalfPi)) / 2.0;
}

std::vector<double> grad_vqc(const VqcClassifier& clf, const LabeledDataset& batch) {
  if (batch.points.empty()) throw std::invalid_argument("gradient on empty batch");
  const std::size_t np = clf.theta.size();
  std::vector<double> grad(np, 0.0);
  const double inv_n = 1.0 / static_cast<double>(batch.points.size());
  std::vector<double> theta = clf.theta;
  for (const auto& pt : batch.points) {
    const double f = vqc_expectation(pt.features, theta);
    const double p = clamp_proba(predict_proba(f, pt.label));
    const double weight = -inv_n * pt.label / (2.0 * p);
    for (std::size_t k = 0; k < np; ++k) {
      const double saved = theta[k];
      const double df = param_shift_derivative(
          [&](double v) {
            theta[k] = v;
            return vqc_expectation(pt.features, theta);
          },
          saved);
      theta[k] = saved;
      grad[k] += weight * df;
    }
  }
  return grad;
}

std::vector<double> grad_hnn(const HybridNetwork& net, const LabeledDataset& batch) {
  if (batch.points.empty()) throw std::invalid_argument("gradient on empty batch");
  const int d = net.input_dim;
  const int m = net.hidden_count;
  std::vector<double> grad(net.param_count(), 0.0);
  const std::size_t output_offset = static_cast<std::size_t>(m) * 2 * d;
  const double inv_n = 1.0 / static_cast<double>(batch.points.size());

  std::vector<double> out_theta = net.output_unit.theta;
  for (const auto& pt : batch.points) {
    const HnnForward fw = forward_hnn(net, pt.features);
    const double p = clamp_proba(predict_proba(fw.z, pt.label));
    const double dcost_dz = -inv_n * pt.label / (2.0 * p);

    // Output-layer angles: plain parameter shift with h fixed.
    for (std::size_t k = 0; k < out_theta.size(); ++k) {
      const double saved = out_theta[k];
      const double dz = param_shift_derivative(
          [&](double v) {
            out_theta[k] = v;
            return vqc_expectation(fw.h, out_theta);
          },
          saved);
      out_theta[k] = saved;
      grad[output_offset + k] += dcost_dz * dz;
    }

    // dz/dh_j: the encoding angle h_j is itself an RY rotation, so the same
    // two-point shift applies. Shifted inputs leave [0, pi].
    std::vector<double> h = fw.h;
    std::vector<double> dz_dh(m);
    for (int j = 0; j < m; ++j) {
      const double saved = h[j];
      dz_dh[j] = param_shift_derivative(
          [&](double v) {
            h[j] = v;
            return vqc_expectation_any_angle(h, net.output_unit.theta);
          },
          saved);
      h[j] = saved;
    }

    // Hidden angles: chain rule through h = (pi/2)(h' + 1).
    for (int j = 0; j < m; ++j) {
      const double upstream = dcost_dz * dz_dh[j] * kHalfPi;
      std::vector<double> theta = net.hidden[j].theta;
      for (std::size_t k = 0; k < theta.size(); ++k) {
        const double saved = theta[k];
        const double dhp = param_shift_derivative(
            [&](double v) {
              theta[k] = v;
              return vqc_expectation(pt.features, theta);
            },
            saved);
        theta[k] = saved;
        grad[static_cast<std::size_t>(j) * 2 * d + k] += upstream * dhp;
      }
    }
  }
  return grad;
}

std::vector<double> model_grad(const Model& model, const LabeledDataset& batch) {
  if (const auto* vqc = std::get_if<VqcClassifier>(&model)) {
    return grad_vqc(*vqc, batch);
  }
  return grad_hnn(std::get<HybridNetwork>(model), batch);
}

}  // namespace vqcnet
