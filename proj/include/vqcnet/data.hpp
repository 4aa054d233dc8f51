#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vqcnet {

struct LabeledPoint {
  std::vector<double> features;
  int label;  // -1 or +1
};

struct LabeledDataset {
  std::string name;
  int dim = 0;
  std::vector<LabeledPoint> points;
  bool preprocessed = false;

  std::size_t size() const { return points.size(); }
};

struct SplitSpec {
  double train_fraction = 0.8;
  std::uint64_t seed = 0;
};

// Bars and Stripes over n x m binary images, all-black and all-white
// excluded. Bars (row subsets) are labeled +1, stripes (column subsets) -1.
// Pixels are encoded directly as 0 / pi, so the set comes back already
// preprocessed. N = 2^n + 2^m - 4.
LabeledDataset generate_bars_and_stripes(int rows, int cols);

// Two isotropic unit-variance Gaussian clusters in 2-D centered at (-2, 0)
// labeled -1 and (+2, 0) labeled +1, n_points split evenly. Resampled until
// the vertical line x0 = 0 separates the classes, so the set is linearly
// separable by construction. Deterministic per seed.
LabeledDataset generate_blobs(int n_points, std::uint64_t seed);

// Loads the 100 versicolor/virginica rows of the iris CSV (header row;
// sepal_length, sepal_width, petal_length, petal_width, species).
// versicolor -> -1, virginica -> +1. Throws std::runtime_error naming the
// row on malformed input.
LabeledDataset load_iris_binary(const std::string& csv_path);

// Parameters of the affine preprocessing map, enough to take grid or model
// outputs back to the raw feature space.
struct PreprocessStats {
  std::vector<double> mean;
  std::vector<double> variance;  // population
  double max_abs = 0.0;          // largest |value| after standardization
};

// Four-step scaling to [0, pi]: standardize each column to mean 0 variance 1
// (population variance), divide everything by the single largest |value|,
// multiply by pi/2, add pi/2. Throws on zero-variance columns.
LabeledDataset preprocess_real(const LabeledDataset& ds,
                               PreprocessStats* stats = nullptr);

// Uniform split without replacement, round(fraction * N) training points.
// fraction 1.0 leaves the test set empty.
std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset& ds,
                                                const SplitSpec& spec);

// CSV export: columns f0..f{d-1}, label.
void write_dataset_csv(const LabeledDataset& ds, const std::string& path);

}  // namespace vqcnet
