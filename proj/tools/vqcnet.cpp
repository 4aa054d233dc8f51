#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vqcnet/data.hpp"
#include "vqcnet/serialize.hpp"
#include "vqcnet/training.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace vqcnet;

namespace {

constexpr const char* kVersion = "vqcnet 0.1.0";

struct RunOptions {
  std::string dataset;
  std::string model;
  int trials = 10;
  int epochs = -1;        // -1: dataset default
  double lr = -1.0;       // <0: dataset default
  int batch_size = -2;    // -2: dataset default, 0: full batch
  std::uint64_t seed = 7;
  int shots = 0;          // 0: exact mode
  int hidden = 2;
  std::string out_dir;
  std::string iris_file = "data/iris.csv";
};

std::string resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("VQC_OUT_DIR")) return env;
  return ".";
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

DatasetSource make_dataset(const RunOptions& opt, PreprocessStats* stats) {
  DatasetSource src;
  if (opt.dataset == "bas") {
    src.full = generate_bars_and_stripes(2, 2);
    src.train_fraction = 1.0;
  } else if (opt.dataset == "synth") {
    src.full = preprocess_real(generate_blobs(100, opt.seed), stats);
    src.train_fraction = 0.8;
  } else if (opt.dataset == "iris") {
    src.full = preprocess_real(load_iris_binary(opt.iris_file), stats);
    src.train_fraction = 0.8;
  } else {
    throw std::invalid_argument("unknown dataset: " + opt.dataset);
  }
  return src;
}

int cmd_run(const RunOptions& opt, const std::string& command_line) {
  const auto t0 = std::chrono::steady_clock::now();

  RunOptions cfg = opt;
  const bool bas = cfg.dataset == "bas";
  if (cfg.epochs < 0) cfg.epochs = bas ? 20 : 10;
  if (cfg.lr < 0) cfg.lr = bas ? 0.5 : 0.1;
  if (cfg.batch_size == -2) cfg.batch_size = bas ? 0 : 16;

  PreprocessStats prep;
  const DatasetSource src = make_dataset(cfg, &prep);

  ModelSpec spec;
  spec.kind = cfg.model == "hnn" ? ModelSpec::Kind::Hnn : ModelSpec::Kind::Vqc;
  spec.hidden_count = cfg.hidden;

  TrainConfig tc;
  tc.epochs = cfg.epochs;
  tc.learning_rate = cfg.lr;
  tc.batch_size = cfg.batch_size;
  tc.init_seed = cfg.seed;
  tc.data_seed = cfg.seed;
  if (cfg.shots > 0) tc.eval_mode = EvalMode::sampled_shots(cfg.shots, cfg.seed);

  const ExperimentResult result = run_experiment(src, spec, cfg.trials, tc);

  const fs::path out_dir = resolve_out_dir(cfg.out_dir);
  fs::create_directories(out_dir);
  std::vector<std::string> artifacts;

  auto emit = [&](const fs::path& name, auto&& writer) {
    const fs::path p = out_dir / name;
    writer(p);
    artifacts.push_back(p.string());
  };

  emit("summary.json", [&](const fs::path& p) {
    write_text(p, summary_to_json(result.summary).dump(2) + "\n");
  });
  for (const auto& tr : result.trial_results) {
    const std::string k = std::to_string(tr.trial);
    emit("trial_" + k + ".json", [&](const fs::path& p) {
      write_text(p, trial_to_json(tr).dump(2) + "\n");
    });
    emit("epochs_" + k + ".csv",
         [&](const fs::path& p) { write_epochs_csv(tr.records, p.string()); });
    emit("model_" + k + ".json", [&](const fs::path& p) {
      const Model m = spec.instantiate(src.full.dim, tr.final_params);
      write_text(p, model_to_json(m).dump(2) + "\n");
    });
  }
  emit("dataset.csv",
       [&](const fs::path& p) { write_dataset_csv(src.full, p.string()); });
  emit("table.txt", [&](const fs::path& p) {
    write_text(p, render_table_text({result.summary}));
  });
  emit("table.csv", [&](const fs::path& p) {
    write_text(p, render_table_csv({result.summary}));
  });

  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  json manifest;
  manifest["command"] = command_line;
  manifest["version"] = kVersion;
  manifest["dataset"] = cfg.dataset;
  manifest["model"] = cfg.model;
  manifest["trials"] = cfg.trials;
  manifest["epochs"] = cfg.epochs;
  manifest["learning_rate"] = cfg.lr;
  manifest["batch_size"] = cfg.batch_size;
  manifest["hidden"] = cfg.hidden;
  manifest["seed"] = cfg.seed;
  manifest["shots"] = cfg.shots;
  manifest["train_fraction"] = src.train_fraction;
  if (!prep.mean.empty()) {
    manifest["preprocessing"] = {{"mean", prep.mean},
                                 {"variance", prep.variance},
                                 {"max_abs", prep.max_abs}};
  }
  manifest["artifacts"] = artifacts;
  manifest["duration_seconds"] = elapsed;
  write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");

  std::cout << render_table_text({result.summary});
  std::cout << "artifacts written to " << out_dir.string() << "\n";
  return 0;
}

std::string svg_color(double p) {
  // blue (p=0) to white (p=0.5) to red (p=1)
  const auto chan = [](double v) {
    return std::to_string(static_cast<int>(std::round(255.0 * std::clamp(v, 0.0, 1.0))));
  };
  double r, g, b;
  if (p < 0.5) {
    const double t = p / 0.5;
    r = t; g = t; b = 1.0;
  } else {
    const double t = (p - 0.5) / 0.5;
    r = 1.0; g = 1.0 - t; b = 1.0 - t;
  }
  return "rgb(" + chan(r) + "," + chan(g) + "," + chan(b) + ")";
}

void write_grid_svg(const fs::path& path, int resolution,
                    const std::vector<double>& probs,
                    const LabeledDataset& points) {
  const double pi = std::numbers::pi;
  const int size = 600;
  const double cell = static_cast<double>(size) / resolution;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\">\n";
  for (int iy = 0; iy < resolution; ++iy) {
    for (int ix = 0; ix < resolution; ++ix) {
      const double p = probs[static_cast<std::size_t>(iy) * resolution + ix];
      // y axis points up in data space
      const double px = ix * cell;
      const double py = size - (iy + 1) * cell;
      svg << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell + 0.5
          << "\" height=\"" << cell + 0.5 << "\" fill=\"" << svg_color(p)
          << "\"/>\n";
      if (std::abs(p - 0.5) < 0.02) {
        svg << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\""
            << cell + 0.5 << "\" height=\"" << cell + 0.5
            << "\" fill=\"black\" fill-opacity=\"0.35\"/>\n";
      }
    }
  }
  for (const auto& pt : points.points) {
    const double cx = pt.features[0] / pi * size;
    const double cy = size - pt.features[1] / pi * size;
    svg << "<circle cx=\"" << cx << "\" cy=\"" << cy
        << "\" r=\"5\" stroke=\"black\" stroke-width=\"1.5\" fill=\""
        << (pt.label > 0 ? "#202020" : "#f0f0f0") << "\"/>\n";
  }
  svg << "</svg>\n";
  write_text(path, svg.str());
}

int cmd_grid(const std::string& model_file, int resolution, std::uint64_t seed,
             const std::string& out_flag) {
  std::ifstream in(model_file);
  if (!in) throw std::runtime_error("cannot open model file: " + model_file);
  json j;
  in >> j;
  const Model model = model_from_json(j);
  const int dim = std::holds_alternative<VqcClassifier>(model)
                      ? std::get<VqcClassifier>(model).input_dim
                      : std::get<HybridNetwork>(model).input_dim;
  if (dim != 2) {
    throw std::invalid_argument("grid evaluation requires a 2-D model, got d=" +
                                std::to_string(dim));
  }
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");

  const LabeledDataset points = preprocess_real(generate_blobs(100, seed));
  const fs::path out_dir = resolve_out_dir(out_flag);
  fs::create_directories(out_dir);

  const double pi = std::numbers::pi;
  std::vector<double> probs;
  probs.reserve(static_cast<std::size_t>(resolution) * resolution);
  std::ostringstream csv;
  csv << "x0,x1,p\n";
  csv.precision(17);
  for (int iy = 0; iy < resolution; ++iy) {
    for (int ix = 0; ix < resolution; ++ix) {
      const double x0 = pi * ix / (resolution - 1);
      const double x1 = pi * iy / (resolution - 1);
      const std::vector<double> x{x0, x1};
      const double p = predict_proba(model, x, +1);
      probs.push_back(p);
      csv << x0 << "," << x1 << "," << p << "\n";
    }
  }
  write_text(out_dir / "grid.csv", csv.str());
  write_dataset_csv(points, (out_dir / "grid_points.csv").string());
  write_grid_svg(out_dir / "grid.svg", resolution, probs, points);
  std::cout << "grid artifacts written to " << out_dir.string() << "\n";
  return 0;
}

int cmd_table(const std::vector<std::string>& files, const std::string& out_flag) {
  std::vector<ExperimentSummary> rows;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw std::runtime_error("cannot open summary file: " + f);
    json j;
    try {
      in >> j;
      rows.push_back(summary_from_json(j));
    } catch (const json::exception& e) {
      throw std::runtime_error("malformed summary " + f + ": " + e.what());
    }
  }
  const fs::path out_dir = resolve_out_dir(out_flag);
  fs::create_directories(out_dir);
  const std::string text = render_table_text(rows);
  write_text(out_dir / "table.txt", text);
  write_text(out_dir / "table.csv", render_table_csv(rows));
  std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational quantum circuit classifier workbench"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    command_line += (i ? " " : "") + std::string(argv[i]);
  }

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Train a model over repeated trials");
  run->add_option("--dataset", run_opt.dataset, "bas | synth | iris")
      ->required()
      ->check(CLI::IsMember({"bas", "synth", "iris"}));
  run->add_option("--model", run_opt.model, "vqc | hnn")
      ->required()
      ->check(CLI::IsMember({"vqc", "hnn"}));
  run->add_option("--trials", run_opt.trials)->check(CLI::PositiveNumber);
  run->add_option("--epochs", run_opt.epochs, "default: 20 for bas, 10 otherwise");
  run->add_option("--lr", run_opt.lr, "default: 0.5 for bas, 0.1 otherwise");
  run->add_option("--batch-size", run_opt.batch_size,
                  "0 for full batch; default: full for bas, 16 otherwise");
  run->add_option("--seed", run_opt.seed);
  run->add_option("--shots", run_opt.shots,
                  "sampled expectation estimation; omit for exact mode");
  run->add_option("--hidden", run_opt.hidden, "hidden neurons (hnn only)")
      ->check(CLI::PositiveNumber);
  run->add_option("--out", run_opt.out_dir, "output directory (or VQC_OUT_DIR)");
  run->add_option("--iris-file", run_opt.iris_file);

  std::string grid_model_file, grid_out;
  int grid_resolution = 50;
  std::uint64_t grid_seed = 7;
  auto* grid = app.add_subcommand(
      "grid", "Evaluate P(+1|x) of a trained 2-D model over [0,pi]^2");
  grid->add_option("--model-file", grid_model_file)->required();
  grid->add_option("--resolution", grid_resolution)->check(CLI::PositiveNumber);
  grid->add_option("--seed", grid_seed, "seed for regenerating the synth points");
  grid->add_option("--out", grid_out);

  std::vector<std::string> table_files;
  std::string table_out;
  auto* table = app.add_subcommand("table", "Merge summary files into one table");
  table->add_option("files", table_files, "summary.json files")->required();
  table->add_option("--out", table_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(run_opt, command_line);
    if (grid->parsed()) return cmd_grid(grid_model_file, grid_resolution,
                                        grid_seed, grid_out);
    return cmd_table(table_files, table_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
