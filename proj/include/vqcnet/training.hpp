#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vqcnet/models.hpp"

namespace vqcnet {

// batch_size 0 means full-batch gradient descent.
struct TrainConfig {
  int epochs = 10;
  double learning_rate = 0.1;
  int batch_size = 0;
  std::uint64_t init_seed = 0;
  std::uint64_t data_seed = 0;
  EvalMode eval_mode = EvalMode::exact();
};

struct EpochRecord {
  int epoch = 0;
  double in_cost = 0.0;
  double in_accuracy = 0.0;  // percent
  std::optional<double> out_cost;
  std::optional<double> out_accuracy;
};

struct Metrics {
  double cost = 0.0;
  double accuracy = 0.0;  // percent
};

struct TrialResult {
  int trial = 0;
  std::vector<double> initial_params;
  std::vector<double> final_params;
  std::vector<EpochRecord> records;  // records[0] is the pre-training state
  TrainConfig config;

  const EpochRecord& final_record() const { return records.back(); }
};

struct StatTriple {
  double median = 0.0;
  double average = 0.0;
  double stddev = 0.0;  // population
};

struct ExperimentSummary {
  std::string dataset;
  std::string model;  // "vqc" or "hnn"
  int param_count = 0;
  int trials = 0;
  StatTriple in_accuracy;
  StatTriple in_cost;
  std::optional<StatTriple> out_accuracy;
  std::optional<StatTriple> out_cost;
};

struct ExperimentResult {
  ExperimentSummary summary;
  std::vector<TrialResult> trial_results;
};

struct ModelSpec {
  enum class Kind { Vqc, Hnn };
  Kind kind = Kind::Vqc;
  int hidden_count = 2;

  std::string name() const { return kind == Kind::Vqc ? "vqc" : "hnn"; }
  int param_count(int input_dim) const {
    return kind == Kind::Vqc ? 2 * input_dim
                             : hidden_count * 2 * input_dim + 2 * hidden_count;
  }
  Model instantiate(int input_dim, std::span<const double> params) const;
};

// i.i.d. uniform samples in [-pi, pi], deterministic per seed.
std::vector<double> init_params(int count, std::uint64_t seed);

Metrics evaluate(const Model& model, const LabeledDataset& ds,
                 const EvalMode& mode = EvalMode::exact());

// Gradient descent over `config.epochs` epochs. Mini-batch mode reshuffles
// each epoch with a seed derived from init_seed. Epoch-end metrics are
// always exact-mode, on the full train set and on `test` when nonempty.
std::pair<Model, std::vector<EpochRecord>> train(
    Model model, const LabeledDataset& train_set, const LabeledDataset* test_set,
    const TrainConfig& config);

// A preprocessed dataset plus how to carve it up per trial. train_fraction
// 1.0 trains on everything with no held-out set.
struct DatasetSource {
  LabeledDataset full;
  double train_fraction = 1.0;
};

// Runs `trials` independent trials (per-trial init and split seeds derived
// from the config seeds) and aggregates median / average / population-std
// statistics of the final metrics.
ExperimentResult run_experiment(const DatasetSource& source,
                                const ModelSpec& spec, int trials,
                                const TrainConfig& config);

StatTriple summarize(const std::vector<double>& values);

}  // namespace vqcnet
