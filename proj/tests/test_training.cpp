#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vqcnet/data.hpp"
#include "vqcnet/rng.hpp"
#include "vqcnet/serialize.hpp"
#include "vqcnet/training.hpp"

using namespace vqcnet;
constexpr double pi = std::numbers::pi;

TEST_CASE("init_params samples uniform [-pi, pi] deterministically") {
  auto a = init_params(10000, 99);
  auto b = init_params(10000, 99);
  CHECK(a == b);
  double mean = 0.0, var = 0.0;
  for (double v : a) {
    CHECK(v >= -pi);
    CHECK(v <= pi);
    mean += v;
  }
  mean /= static_cast<double>(a.size());
  for (double v : a) var += (v - mean) * (v - mean);
  var /= static_cast<double>(a.size());
  CHECK(std::abs(mean) < 0.1);
  CHECK(var == doctest::Approx(pi * pi / 3.0).epsilon(0.1));
}

TEST_CASE("evaluate on a trivial balanced set") {
  VqcClassifier clf;
  clf.input_dim = 1;
  clf.theta = {0.0, 0.0};
  LabeledDataset ds;
  ds.dim = 1;
  ds.preprocessed = true;
  ds.points.push_back({{pi / 2}, +1});
  ds.points.push_back({{pi / 2}, -1});
  const Metrics m = evaluate(Model{clf}, ds);
  CHECK(m.cost == doctest::Approx(std::log(2.0)));
  // f = 0 predicts +1 on both points, half correct
  CHECK(m.accuracy == doctest::Approx(50.0));

  LabeledDataset empty;
  CHECK_THROWS_AS(evaluate(Model{clf}, empty), std::invalid_argument);
}

TEST_CASE("evaluate a hand-built d=1 threshold model on four points") {
  // theta = (-pi/2, 0): f = cos(x - pi/2) = sin(x) >= 0 on [0, pi], so every
  // point is predicted +1.
  VqcClassifier clf;
  clf.input_dim = 1;
  clf.theta = {-pi / 2, 0.0};
  LabeledDataset ds;
  ds.dim = 1;
  ds.preprocessed = true;
  ds.points.push_back({{0.2}, +1});
  ds.points.push_back({{1.0}, +1});
  ds.points.push_back({{2.0}, -1});
  ds.points.push_back({{3.0}, +1});
  CHECK(evaluate(Model{clf}, ds).accuracy == doctest::Approx(75.0));
}

TEST_CASE("zero learning rate leaves parameters untouched") {
  auto ds = generate_bars_and_stripes(2, 2);
  const auto theta0 = init_params(8, 5);
  VqcClassifier clf;
  clf.input_dim = 4;
  clf.theta = theta0;
  TrainConfig cfg;
  cfg.epochs = 3;
  cfg.learning_rate = 0.0;
  auto [model, records] = train(Model{clf}, ds, nullptr, cfg);
  CHECK(model_flat_params(model) == theta0);
  REQUIRE(records.size() == 4);
  for (const auto& r : records) {
    CHECK(r.in_cost == doctest::Approx(records[0].in_cost));
    CHECK_FALSE(r.out_cost.has_value());
  }
}

TEST_CASE("full-batch run produces one record per epoch plus epoch zero") {
  auto ds = generate_bars_and_stripes(2, 2);
  TrainConfig cfg;
  cfg.epochs = 20;
  cfg.learning_rate = 0.5;
  cfg.init_seed = 3;
  VqcClassifier clf;
  clf.input_dim = 4;
  clf.theta = init_params(8, 3);
  auto [model, records] = train(Model{clf}, ds, nullptr, cfg);
  CHECK(records.size() == 21);
}

TEST_CASE("training is deterministic given the seeds") {
  auto full = preprocess_real(generate_blobs(40, 11));
  auto [tr, te] = split(full, SplitSpec{0.8, 2});
  TrainConfig cfg;
  cfg.epochs = 2;
  cfg.learning_rate = 0.1;
  cfg.batch_size = 8;
  cfg.init_seed = 17;
  VqcClassifier clf;
  clf.input_dim = 2;
  clf.theta = init_params(4, 17);

  auto [m1, r1] = train(Model{clf}, tr, &te, cfg);
  auto [m2, r2] = train(Model{clf}, tr, &te, cfg);
  CHECK(model_flat_params(m1) == model_flat_params(m2));
  REQUIRE(r1.size() == r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].in_cost == r2[i].in_cost);
    CHECK(r1[i].out_cost == r2[i].out_cost);
  }
  REQUIRE(r1.back().out_accuracy.has_value());
  CHECK(*r1.back().out_accuracy >= 0.0);
  CHECK(*r1.back().out_accuracy <= 100.0);
}

TEST_CASE("batch size larger than the training set is rejected") {
  auto ds = generate_bars_and_stripes(2, 2);
  TrainConfig cfg;
  cfg.batch_size = 10;
  VqcClassifier clf;
  clf.input_dim = 4;
  clf.theta = init_params(8, 1);
  CHECK_THROWS_AS(train(Model{clf}, ds, nullptr, cfg), std::invalid_argument);
}

TEST_CASE("small-step full-batch descent does not increase the cost") {
  auto ds = generate_bars_and_stripes(2, 2);
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    TrainConfig cfg;
    cfg.epochs = 5;
    cfg.learning_rate = 1e-3;
    cfg.init_seed = seed;
    VqcClassifier clf;
    clf.input_dim = 4;
    clf.theta = init_params(8, seed);
    auto [model, records] = train(Model{clf}, ds, nullptr, cfg);
    bool monotone = true;
    for (std::size_t i = 1; i < records.size(); ++i) {
      if (records[i].in_cost > records[i - 1].in_cost + 1e-12) monotone = false;
    }
    if (monotone) ++ok;
  }
  CHECK(ok >= 9);
}

TEST_CASE("summary statistics") {
  auto s = summarize({1.0, 2.0, 3.0, 4.0});
  CHECK(s.median == doctest::Approx(2.5));
  CHECK(s.average == doctest::Approx(2.5));
  CHECK(s.stddev == doctest::Approx(std::sqrt(1.25)));
  auto one = summarize({7.0});
  CHECK(one.median == 7.0);
  CHECK(one.average == 7.0);
  CHECK(one.stddev == 0.0);
}

TEST_CASE("single-trial experiment summary collapses to the trial value") {
  DatasetSource src;
  src.full = generate_bars_and_stripes(2, 2);
  src.train_fraction = 1.0;
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Vqc;
  TrainConfig cfg;
  cfg.epochs = 2;
  cfg.learning_rate = 0.5;
  cfg.init_seed = 4;
  auto result = run_experiment(src, spec, 1, cfg);
  REQUIRE(result.trial_results.size() == 1);
  const auto& last = result.trial_results[0].final_record();
  CHECK(result.summary.in_accuracy.median == last.in_accuracy);
  CHECK(result.summary.in_accuracy.average == last.in_accuracy);
  CHECK(result.summary.in_accuracy.stddev == 0.0);
  CHECK_FALSE(result.summary.out_accuracy.has_value());  // BAS has no test set
  CHECK(result.summary.param_count == 8);
}

TEST_CASE("rerunning an experiment reproduces it bit for bit") {
  DatasetSource src;
  src.full = preprocess_real(generate_blobs(20, 3));
  src.train_fraction = 0.8;
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Hnn;
  spec.hidden_count = 2;
  TrainConfig cfg;
  cfg.epochs = 1;
  cfg.learning_rate = 0.1;
  cfg.batch_size = 4;
  cfg.init_seed = 8;
  cfg.data_seed = 8;
  auto a = run_experiment(src, spec, 2, cfg);
  auto b = run_experiment(src, spec, 2, cfg);
  CHECK(a.summary.in_cost.average == b.summary.in_cost.average);
  for (int t = 0; t < 2; ++t) {
    CHECK(a.trial_results[t].final_params == b.trial_results[t].final_params);
  }
  // recomputing the summary from stored trial results reproduces it exactly
  std::vector<double> acc;
  for (const auto& tr : a.trial_results) acc.push_back(tr.final_record().in_accuracy);
  auto re = summarize(acc);
  CHECK(re.median == a.summary.in_accuracy.median);
  CHECK(re.average == a.summary.in_accuracy.average);
  CHECK(re.stddev == a.summary.in_accuracy.stddev);
}

TEST_CASE("model json round-trip") {
  auto net = HybridNetwork::make(2, 2, init_params(12, 6));
  const Model m{net};
  const auto j = model_to_json(m);
  CHECK(j.at("model_type") == "hnn");
  const Model back = model_from_json(j);
  CHECK(model_flat_params(back) == model_flat_params(m));

  VqcClassifier clf;
  clf.input_dim = 4;
  clf.theta = init_params(8, 2);
  const auto j2 = model_to_json(Model{clf});
  CHECK(model_flat_params(model_from_json(j2)) == clf.theta);
}

TEST_CASE("summary json round-trip keeps the recorded statistics") {
  ExperimentSummary s;
  s.dataset = "synth";
  s.model = "hnn";
  s.param_count = 12;
  s.trials = 10;
  s.in_accuracy = {97.5, 93.88, 9.0};
  s.in_cost = {0.29, 0.33, 0.13};
  s.out_accuracy = StatTriple{97.5, 94.5, 8.79};
  s.out_cost = StatTriple{0.25, 0.29, 0.14};
  const auto back = summary_from_json(summary_to_json(s));
  CHECK(back.in_accuracy.average == s.in_accuracy.average);
  CHECK(back.out_cost->stddev == s.out_cost->stddev);
  CHECK(back.param_count == 12);

  ExperimentSummary bas = s;
  bas.out_accuracy.reset();
  bas.out_cost.reset();
  const auto back2 = summary_from_json(summary_to_json(bas));
  CHECK_FALSE(back2.out_accuracy.has_value());
  const auto text = render_table_text({back2});
  CHECK(text.find("N/A") != std::string::npos);
}
