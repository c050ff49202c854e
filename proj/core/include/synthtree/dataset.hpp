#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synthtree/matrix.hpp"

namespace synthtree {

enum class TaskKind { Regression, Classification };

std::string to_string(TaskKind task);
TaskKind task_from_string(const std::string& s);

/// Column provenance. Numeric columns may carry the imputation median used at
/// load time; Nominal columns exist only between load_csv and dummy_encode;
/// Dummy columns remember their origin column and level so the encoding is
/// lossless.
struct ColumnKind {
    enum class Tag { Numeric, Nominal, Dummy };
    Tag tag = Tag::Numeric;
    double median = 0.0;                // Numeric: imputation value
    std::vector<std::string> levels;    // Nominal: observed levels, sorted
    std::string origin;                 // Dummy: source column name
    std::string level;                  // Dummy: source level
};

struct Dataset {
    Matrix x;                              // n x p, nominal columns stored as level indices
    std::vector<double> y;                 // length n; {0,1} for classification
    TaskKind task = TaskKind::Regression;
    std::vector<std::string> column_names; // length p
    std::vector<ColumnKind> column_kinds;  // length p
    std::string target_column;
    std::size_t dropped_rows = 0;          // rows lost to missing/unparseable target

    std::size_t n() const { return x.rows(); }
    std::size_t p() const { return x.cols(); }
    bool has_nominal() const;

    /// Subset by row indices (order preserved); metadata shared.
    Dataset take_rows(std::span<const int> indices) const;
};

struct ScalingParams {
    std::vector<double> means;
    std::vector<double> stddevs;  // zero-variance columns recorded as 1
};

struct LoadOptions {
    /// Columns to treat as nominal even when every value parses as a number
    /// (e.g. integer-coded gain settings).
    std::vector<std::string> force_nominal;
    /// Class label mapped to y=1 for classification; default = the
    /// lexicographically larger of the two observed labels.
    std::optional<std::string> positive_label;
};

/// Parse a CSV into a Dataset. Rows with missing/unparseable target are
/// dropped and counted; missing numeric predictors are imputed with the
/// column median; columns with any non-numeric value are flagged nominal.
Dataset load_csv(const std::string& path, const std::string& target_column, TaskKind task,
                 const LoadOptions& options = {});
Dataset load_csv_text(const std::string& text, const std::string& target_column, TaskKind task,
                      const LoadOptions& options = {});

/// Expand every nominal column into one 0/1 column per level (full one-hot).
/// Numeric columns pass through unchanged, order: originals replaced in place.
Dataset dummy_encode(const Dataset& dataset, std::size_t max_levels = 64);

/// Deterministic split; stratified by class for classification.
std::pair<Dataset, Dataset> train_test_split(const Dataset& dataset, double test_fraction,
                                             std::uint64_t seed);

/// Column-wise standardization to mean 0 / sample sd 1 (n-1 denominator).
std::pair<Dataset, ScalingParams> standardize(const Dataset& dataset);

ScalingParams compute_scaling(const Matrix& x);
Matrix apply_scaling(const Matrix& x, const ScalingParams& params);
Matrix invert_scaling(const Matrix& x, const ScalingParams& params);

/// Plain-text key-value manifest recording how a dataset was prepared.
void write_dataset_manifest(const std::string& path, const Dataset& dataset,
                            std::uint64_t seed);

}  // namespace synthtree
