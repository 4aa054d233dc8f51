#include "vqcnet/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "vqcnet/rng.hpp"

namespace vqcnet {

LabeledDataset generate_bars_and_stripes(int rows, int cols) {
  if (rows < 2 || cols < 2) {
    throw std::invalid_argument("bars and stripes requires rows, cols >= 2");
  }
  const double pi = std::numbers::pi;
  LabeledDataset ds;
  ds.name = "bas" + std::to_string(rows) + "x" + std::to_string(cols);
  ds.dim = rows * cols;
  ds.preprocessed = true;  // pixels map straight to 0 / pi

  // Bars: every nonempty proper subset of rows fully highlighted.
  for (unsigned mask = 1; mask + 1 < (1u << rows); ++mask) {
    LabeledPoint p;
    p.label = +1;
    p.features.resize(ds.dim);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        p.features[r * cols + c] = (mask >> r & 1) ? pi : 0.0;
    ds.points.push_back(std::move(p));
  }
  // Stripes: column subsets.
  for (unsigned mask = 1; mask + 1 < (1u << cols); ++mask) {
    LabeledPoint p;
    p.label = -1;
    p.features.resize(ds.dim);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        p.features[r * cols + c] = (mask >> c & 1) ? pi : 0.0;
    ds.points.push_back(std::move(p));
  }
  return ds;
}

LabeledDataset generate_blobs(int n_points, std::uint64_t seed) {
  if (n_points < 2 || n_points % 2 != 0) {
    throw std::invalid_argument("blob count must be even and positive");
  }
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    LabeledDataset ds;
    ds.name = "synth";
    ds.dim = 2;
    bool separable = true;
    for (int i = 0; i < n_points; ++i) {
      const int label = (i < n_points / 2) ? -1 : +1;
      const double cx = (label < 0) ? -2.0 : 2.0;
      LabeledPoint p;
      p.label = label;
      p.features = {cx + rng.normal(), rng.normal()};
      if (p.features[0] * label <= 0.0) separable = false;
      ds.points.push_back(std::move(p));
    }
    // The separating line x0 = 0 must classify every point; otherwise
    // regenerate from the next derived seed.
    if (separable) return ds;
  }
}

LabeledDataset load_iris_binary(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open iris file: " + csv_path);
  LabeledDataset ds;
  ds.name = "iris";
  ds.dim = 4;
  std::string line;
  std::getline(in, line);  // header
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    LabeledPoint p;
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(ss, field, ',')) {
        throw std::runtime_error("iris row " + std::to_string(row) +
                                 ": expected 5 fields");
      }
      try {
        p.features.push_back(std::stod(field));
      } catch (const std::exception&) {
        throw std::runtime_error("iris row " + std::to_string(row) +
                                 ": bad numeric field '" + field + "'");
      }
    }
    if (!std::getline(ss, field)) {
      throw std::runtime_error("iris row " + std::to_string(row) +
                               ": missing species");
    }
    if (field == "setosa") continue;
    if (field == "versicolor") {
      p.label = -1;
    } else if (field == "virginica") {
      p.label = +1;
    } else {
      throw std::runtime_error("iris row " + std::to_string(row) +
                               ": unknown species '" + field + "'");
    }
    ds.points.push_back(std::move(p));
  }
  return ds;
}

LabeledDataset preprocess_real(const LabeledDataset& ds, PreprocessStats* stats) {
  if (ds.preprocessed) {
    throw std::invalid_argument("dataset already preprocessed");
  }
  if (ds.points.empty()) throw std::invalid_argument("empty dataset");
  const std::size_t n = ds.points.size();
  const int d = ds.dim;

  std::vector<double> mean(d, 0.0), var(d, 0.0);
  for (const auto& p : ds.points)
    for (int j = 0; j < d; ++j) mean[j] += p.features[j];
  for (int j = 0; j < d; ++j) mean[j] /= static_cast<double>(n);
  for (const auto& p : ds.points)
    for (int j = 0; j < d; ++j) {
      const double dev = p.features[j] - mean[j];
      var[j] += dev * dev;
    }
  for (int j = 0; j < d; ++j) {
    var[j] /= static_cast<double>(n);  // population variance
    if (var[j] == 0.0) {
      throw std::invalid_argument("feature column " + std::to_string(j) +
                                  " has zero variance");
    }
  }

  LabeledDataset out = ds;
  double max_abs = 0.0;
  for (auto& p : out.points)
    for (int j = 0; j < d; ++j) {
      p.features[j] = (p.features[j] - mean[j]) / std::sqrt(var[j]);
      max_abs = std::max(max_abs, std::abs(p.features[j]));
    }
  const double half_pi = std::numbers::pi / 2.0;
  for (auto& p : out.points)
    for (int j = 0; j < d; ++j) {
      p.features[j] = half_pi * (p.features[j] / max_abs) + half_pi;
    }
  out.preprocessed = true;
  if (stats != nullptr) {
    stats->mean = std::move(mean);
    stats->variance = std::move(var);
    stats->max_abs = max_abs;
  }
  return out;
}

std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& ds,
                                                const SplitSpec& spec) {
  if (!ds.preprocessed) throw std::invalid_argument("split requires preprocessed data");
  const std::size_t n = ds.points.size();
  const auto train_size =
      static_cast<std::size_t>(std::llround(spec.train_fraction * static_cast<double>(n)));
  if (train_size == 0 || train_size > n ||
      (spec.train_fraction < 1.0 && train_size == n)) {
    throw std::invalid_argument("split fraction yields an empty partition");
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  Rng rng(spec.seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(idx[i], idx[rng.below(i + 1)]);
  }
  LabeledDataset train = ds, test = ds;
  train.points.clear();
  test.points.clear();
  for (std::size_t i = 0; i < n; ++i) {
    (i < train_size ? train : test).points.push_back(ds.points[idx[i]]);
  }
  return {std::move(train), std::move(test)};
}

void write_dataset_csv(const LabeledDataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (int j = 0; j < ds.dim; ++j) out << "f" << j << ",";
  out << "label\n";
  out.precision(17);
  for (const auto& p : ds.points) {
    for (double v : p.features) out << v << ",";
    out << p.label << "\n";
  }
}

}  // namespace vqcnet
