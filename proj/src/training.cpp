#include "vqcnet/training.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "vqcnet/rng.hpp"

namespace vqcnet {

namespace {

// Stream tags for seed derivation so unrelated consumers of the same base
// seed never collide.
constexpr std::uint64_t kStreamShuffle = 0x73687566666c65ULL;  // "shuffle"
constexpr std::uint64_t kStreamTrialInit = 0x696e6974ULL;      // "init"
constexpr std::uint64_t kStreamTrialSplit = 0x73706c6974ULL;   // "split"

EpochRecord record_epoch(int epoch, const Model& model,
                         const LabeledDataset& train_set,
                         const LabeledDataset* test_set) {
  EpochRecord rec;
  rec.epoch = epoch;
  const Metrics in = evaluate(model, train_set);
  rec.in_cost = in.cost;
  rec.in_accuracy = in.accuracy;
  if (test_set != nullptr && !test_set->points.empty()) {
    const Metrics out = evaluate(model, *test_set);
    rec.out_cost = out.cost;
    rec.out_accuracy = out.accuracy;
  }
  return rec;
}

}  // namespace

Model ModelSpec::instantiate(int input_dim, std::span<const double> params) const {
  if (kind == Kind::Vqc) {
    VqcClassifier clf;
    clf.input_dim = input_dim;
    if (static_cast<int>(params.size()) != 2 * input_dim) {
      throw std::invalid_argument("vqc parameter vector length mismatch");
    }
    clf.theta.assign(params.begin(), params.end());
    return clf;
  }
  return HybridNetwork::make(input_dim, hidden_count, params);
}

std::vector<double> init_params(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out(count);
  for (auto& v : out) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
  return out;
}

Metrics evaluate(const Model& model, const LabeledDataset& ds,
                 const EvalMode& mode) {
  if (ds.points.empty()) throw std::invalid_argument("evaluate on empty dataset");
  Metrics m;
  m.cost = nll_cost(model, ds, mode);
  int correct = 0;
  for (const auto& p : ds.points) {
    if (predict_label(model, p.features, mode) == p.label) ++correct;
  }
  m.accuracy = 100.0 * correct / static_cast<double>(ds.points.size());
  return m;
}

std::pair<Model, std::vector<EpochRecord>> train(
    Model model, const LabeledDataset& train_set, const LabeledDataset* test_set,
    const TrainConfig& config) {
  if (train_set.points.empty()) throw std::invalid_argument("empty training set");
  const std::size_t n = train_set.points.size();
  const std::size_t batch_size =
      config.batch_size <= 0 ? n : static_cast<std::size_t>(config.batch_size);
  if (batch_size > n) {
    throw std::invalid_argument("batch size exceeds training-set size");
  }

  std::vector<EpochRecord> records;
  records.push_back(record_epoch(0, model, train_set, test_set));

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    if (batch_size < n) {
      Rng rng(derive_seed(derive_seed(config.init_seed, kStreamShuffle),
                          static_cast<std::uint64_t>(epoch)));
      for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(order[i], order[rng.below(i + 1)]);
      }
    }
    for (std::size_t start = 0; start < n; start += batch_size) {
      LabeledDataset batch = train_set;
      batch.points.clear();
      const std::size_t end = std::min(start + batch_size, n);
      for (std::size_t i = start; i < end; ++i) {
        batch.points.push_back(train_set.points[order[i]]);
      }
      const std::vector<double> grad = model_grad(model, batch);
      std::vector<double> params = model_flat_params(model);
      for (std::size_t k = 0; k < params.size(); ++k) {
        params[k] -= config.learning_rate * grad[k];
      }
      model_set_flat_params(model, params);
    }
    records.push_back(record_epoch(epoch, model, train_set, test_set));
  }
  return {std::move(model), std::move(records)};
}

StatTriple summarize(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("summarize on empty vector");
  StatTriple s;
  const double n = static_cast<double>(values.size());
  for (double v : values) s.average += v;
  s.average /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - s.average) * (v - s.average);
  s.stddev = std::sqrt(ss / n);
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  s.median = (sorted.size() % 2 == 1) ? sorted[mid]
                                      : (sorted[mid - 1] + sorted[mid]) / 2.0;
  return s;
}

ExperimentResult run_experiment(const DatasetSource& source,
                                const ModelSpec& spec, int trials,
                                const TrainConfig& config) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!source.full.preprocessed) {
    throw std::invalid_argument("experiment dataset must be preprocessed");
  }

  ExperimentResult result;
  result.summary.dataset = source.full.name;
  result.summary.model = spec.name();
  result.summary.param_count = spec.param_count(source.full.dim);
  result.summary.trials = trials;

  std::vector<double> in_acc, in_cost, out_acc, out_cost;
  for (int t = 0; t < trials; ++t) {
    LabeledDataset train_set = source.full;
    LabeledDataset test_set;
    bool has_test = source.train_fraction < 1.0;
    if (has_test) {
      SplitSpec sp{source.train_fraction,
                   derive_seed(derive_seed(config.data_seed, kStreamTrialSplit),
                               static_cast<std::uint64_t>(t))};
      std::tie(train_set, test_set) = split(source.full, sp);
    }

    TrainConfig trial_cfg = config;
    trial_cfg.init_seed = derive_seed(
        derive_seed(config.init_seed, kStreamTrialInit), static_cast<std::uint64_t>(t));
    const std::vector<double> theta0 =
        init_params(spec.param_count(source.full.dim), trial_cfg.init_seed);
    Model model = spec.instantiate(source.full.dim, theta0);

    auto [trained, records] =
        train(std::move(model), train_set, has_test ? &test_set : nullptr, trial_cfg);

    TrialResult tr;
    tr.trial = t;
    tr.initial_params = theta0;
    tr.final_params = model_flat_params(trained);
    tr.records = std::move(records);
    tr.config = trial_cfg;

    const EpochRecord& last = tr.final_record();
    in_acc.push_back(last.in_accuracy);
    in_cost.push_back(last.in_cost);
    if (last.out_accuracy) {
      out_acc.push_back(*last.out_accuracy);
      out_cost.push_back(*last.out_cost);
    }
    result.trial_results.push_back(std::move(tr));
  }

  result.summary.in_accuracy = summarize(in_acc);
  result.summary.in_cost = summarize(in_cost);
  if (!out_acc.empty()) {
    result.summary.out_accuracy = summarize(out_acc);
    result.summary.out_cost = summarize(out_cost);
  }
  return result;
}

}  // namespace vqcnet
