#include "vqcnet/serialize.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace vqcnet {

using nlohmann::json;

json model_to_json(const Model& model) {
  json j;
  if (const auto* vqc = std::get_if<VqcClassifier>(&model)) {
    j["model_type"] = "vqc";
    j["input_dim"] = vqc->input_dim;
    j["parameters"] = vqc->theta;
  } else {
    const auto& net = std::get<HybridNetwork>(model);
    j["model_type"] = "hnn";
    j["input_dim"] = net.input_dim;
    j["hidden_count"] = net.hidden_count;
    j["parameters"] = net.flat_params();
  }
  return j;
}

Model model_from_json(const json& j) {
  const std::string type = j.at("model_type").get<std::string>();
  const int input_dim = j.at("input_dim").get<int>();
  const auto params = j.at("parameters").get<std::vector<double>>();
  if (type == "vqc") {
    VqcClassifier clf;
    clf.input_dim = input_dim;
    if (static_cast<int>(params.size()) != 2 * input_dim) {
      throw std::invalid_argument("vqc parameter count mismatch in model file");
    }
    clf.theta = params;
    return clf;
  }
  if (type == "hnn") {
    return HybridNetwork::make(input_dim, j.at("hidden_count").get<int>(), params);
  }
  throw std::invalid_argument("unknown model_type: " + type);
}

namespace {

json stat_to_json(const StatTriple& s) {
  return json{{"median", s.median}, {"average", s.average}, {"std", s.stddev}};
}

StatTriple stat_from_json(const json& j) {
  return {j.at("median").get<double>(), j.at("average").get<double>(),
          j.at("std").get<double>()};
}

}  // namespace

json summary_to_json(const ExperimentSummary& s) {
  json j;
  j["dataset"] = s.dataset;
  j["model"] = s.model;
  j["param_count"] = s.param_count;
  j["trials"] = s.trials;
  j["in_accuracy"] = stat_to_json(s.in_accuracy);
  j["in_cost"] = stat_to_json(s.in_cost);
  if (s.out_accuracy) {
    j["out_accuracy"] = stat_to_json(*s.out_accuracy);
    j["out_cost"] = stat_to_json(*s.out_cost);
  }
  return j;
}

ExperimentSummary summary_from_json(const json& j) {
  ExperimentSummary s;
  s.dataset = j.at("dataset").get<std::string>();
  s.model = j.at("model").get<std::string>();
  s.param_count = j.at("param_count").get<int>();
  s.trials = j.at("trials").get<int>();
  s.in_accuracy = stat_from_json(j.at("in_accuracy"));
  s.in_cost = stat_from_json(j.at("in_cost"));
  if (j.contains("out_accuracy")) {
    s.out_accuracy = stat_from_json(j.at("out_accuracy"));
    s.out_cost = stat_from_json(j.at("out_cost"));
  }
  return s;
}

json trial_to_json(const TrialResult& t) {
  json j;
  j["trial"] = t.trial;
  j["initial_params"] = t.initial_params;
  j["final_params"] = t.final_params;
  j["init_seed"] = t.config.init_seed;
  j["epochs"] = t.config.epochs;
  j["learning_rate"] = t.config.learning_rate;
  j["batch_size"] = t.config.batch_size;
  const EpochRecord& last = t.final_record();
  j["final"] = {{"epoch", last.epoch},
                {"in_cost", last.in_cost},
                {"in_accuracy", last.in_accuracy}};
  if (last.out_accuracy) {
    j["final"]["out_cost"] = *last.out_cost;
    j["final"]["out_accuracy"] = *last.out_accuracy;
  }
  return j;
}

void write_epochs_csv(const std::vector<EpochRecord>& records,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "epoch,in_cost,in_acc,out_cost,out_acc\n";
  out.precision(17);
  for (const auto& r : records) {
    out << r.epoch << "," << r.in_cost << "," << r.in_accuracy << ",";
    if (r.out_cost) out << *r.out_cost;
    out << ",";
    if (r.out_accuracy) out << *r.out_accuracy;
    out << "\n";
  }
}

namespace {

std::string fmt_stat(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

void append_stat_cells(std::vector<std::string>& cells,
                       const std::optional<StatTriple>& s) {
  if (s) {
    cells.push_back(fmt_stat(s->median));
    cells.push_back(fmt_stat(s->average));
    cells.push_back(fmt_stat(s->stddev));
  } else {
    cells.insert(cells.end(), 3, "N/A");
  }
}

std::vector<std::string> row_cells(const ExperimentSummary& s) {
  std::vector<std::string> cells{"simulated", s.dataset, s.model,
                                 std::to_string(s.param_count)};
  append_stat_cells(cells, s.in_accuracy);
  append_stat_cells(cells, s.in_cost);
  append_stat_cells(cells, s.out_accuracy);
  append_stat_cells(cells, s.out_cost);
  return cells;
}

const std::vector<std::string>& header_cells() {
  static const std::vector<std::string> h{
      "hardware",    "data",       "model",      "parameters",
      "in_acc_med",  "in_acc_avg", "in_acc_std", "in_cost_med",
      "in_cost_avg", "in_cost_std", "out_acc_med", "out_acc_avg",
      "out_acc_std", "out_cost_med", "out_cost_avg", "out_cost_std"};
  return h;
}

}  // namespace

std::string render_table_text(const std::vector<ExperimentSummary>& rows) {
  std::vector<std::vector<std::string>> table{header_cells()};
  for (const auto& r : rows) table.push_back(row_cells(r));
  std::vector<std::size_t> widths(table[0].size(), 0);
  for (const auto& row : table)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << std::setw(static_cast<int>(widths[c])) << row[c]
         << (c + 1 < row.size() ? "  " : "");
    }
    os << "\n";
  }
  return os.str();
}

std::string render_table_csv(const std::vector<ExperimentSummary>& rows) {
  std::ostringstream os;
  const auto& h = header_cells();
  for (std::size_t c = 0; c < h.size(); ++c)
    os << h[c] << (c + 1 < h.size() ? "," : "\n");
  for (const auto& r : rows) {
    const auto cells = row_cells(r);
    for (std::size_t c = 0; c < cells.size(); ++c)
      os << cells[c] << (c + 1 < cells.size() ? "," : "\n");
  }
  return os.str();
}

}  // namespace vqcnet
