#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vqcnet/training.hpp"

namespace vqcnet {

nlohmann::json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& j);

nlohmann::json summary_to_json(const ExperimentSummary& s);
ExperimentSummary summary_from_json(const nlohmann::json& j);

nlohmann::json trial_to_json(const TrialResult& t);

// CSV columns: epoch, in_cost, in_acc, out_cost, out_acc. Absent
// out-of-sample values are written as empty fields.
void write_epochs_csv(const std::vector<EpochRecord>& records,
                      const std::string& path);

// Fixed-width text table in the layout of the results table: hardware, data,
// model, parameters, then median/avg/std for in/out accuracy and cost.
std::string render_table_text(const std::vector<ExperimentSummary>& rows);
std::string render_table_csv(const std::vector<ExperimentSummary>& rows);

}  // namespace vqcnet
