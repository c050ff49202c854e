#include "synthtree/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "synthtree/csv.hpp"
#include "synthtree/error.hpp"
#include "synthtree/rng.hpp"

namespace synthtree {

std::string to_string(TaskKind task) {
    return task == TaskKind::Regression ? "regression" : "classification";
}

TaskKind task_from_string(const std::string& s) {
    if (s == "regression") return TaskKind::Regression;
    if (s == "classification") return TaskKind::Classification;
    fail("BadTask", "unknown task kind '" + s + "'");
}

bool Dataset::has_nominal() const {
    return std::any_of(column_kinds.begin(), column_kinds.end(),
                       [](const ColumnKind& k) { return k.tag == ColumnKind::Tag::Nominal; });
}

Dataset Dataset::take_rows(std::span<const int> indices) const {
    Dataset out;
    out.x = x.take_rows(indices);
    out.y.reserve(indices.size());
    for (int i : indices) out.y.push_back(y[static_cast<std::size_t>(i)]);
    out.task = task;
    out.column_names = column_names;
    out.column_kinds = column_kinds;
    out.target_column = target_column;
    return out;
}

namespace {

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    std::size_t m = v.size() / 2;
    if (v.size() % 2 == 1) return v[m];
    return 0.5 * (v[m - 1] + v[m]);
}

bool is_missing(const std::string& field) {
    if (field.empty()) return true;
    static const std::set<std::string> kMissing = {"NA", "na", "N/A", "n/a", "?", "NaN", "nan",
                                                   "NULL", "null"};
    return kMissing.count(field) > 0;
}

}  // namespace

Dataset load_csv_text(const std::string& text, const std::string& target_column, TaskKind task,
                      const LoadOptions& options) {
    csv::Table table = csv::parse_csv(text);

    std::size_t target_idx = table.header.size();
    for (std::size_t j = 0; j < table.header.size(); ++j)
        if (table.header[j] == target_column) target_idx = j;
    if (target_idx == table.header.size())
        fail("MissingTarget", "target column '" + target_column + "' not in header");

    // Pass 1: drop rows with unusable target.
    std::vector<std::vector<std::string>*> usable;
    std::size_t dropped = 0;
    std::vector<double> target_values;
    std::map<std::string, double> class_codes;
    if (task == TaskKind::Classification) {
        std::set<std::string> labels;
        for (auto& row : table.rows)
            if (!is_missing(row[target_idx])) labels.insert(row[target_idx]);
        if (labels.size() > 2) fail("BadTask", "classification target has more than two labels");
        if (!labels.empty()) {
            std::string positive = options.positive_label.value_or(*labels.rbegin());
            for (const auto& l : labels) class_codes[l] = (l == positive) ? 1.0 : 0.0;
        }
    }
    for (auto& row : table.rows) {
        const std::string& t = row[target_idx];
        double yv = 0.0;
        bool ok = false;
        if (!is_missing(t)) {
            if (task == TaskKind::Classification) {
                auto it = class_codes.find(t);
                ok = it != class_codes.end();
                if (ok) yv = it->second;
            } else {
                ok = csv::parse_double(t, yv);
            }
        }
        if (ok) {
            usable.push_back(&row);
            target_values.push_back(yv);
        } else {
            ++dropped;
        }
    }
    if (usable.empty()) fail("EmptyDataset", "no usable rows after target filtering");

    // Pass 2: classify predictor columns as numeric or nominal.
    std::size_t n = usable.size();
    std::vector<std::size_t> pred_cols;
    for (std::size_t j = 0; j < table.header.size(); ++j)
        if (j != target_idx) pred_cols.push_back(j);
    if (pred_cols.empty()) fail("EmptyDataset", "no predictor columns");

    std::set<std::string> forced(options.force_nominal.begin(), options.force_nominal.end());

    Dataset ds;
    ds.task = task;
    ds.target_column = target_column;
    ds.dropped_rows = dropped;
    ds.y = std::move(target_values);
    ds.x = Matrix(n, pred_cols.size());

    for (std::size_t cj = 0; cj < pred_cols.size(); ++cj) {
        std::size_t j = pred_cols[cj];
        ds.column_names.push_back(table.header[j]);
        bool numeric = forced.count(table.header[j]) == 0;
        if (numeric) {
            for (auto* row : usable) {
                double v;
                if (!is_missing((*row)[j]) && !csv::parse_double((*row)[j], v)) {
                    numeric = false;
                    break;
                }
            }
        }
        ColumnKind kind;
        if (numeric) {
            kind.tag = ColumnKind::Tag::Numeric;
            std::vector<double> present;
            for (auto* row : usable) {
                double v;
                if (csv::parse_double((*row)[j], v)) present.push_back(v);
            }
            kind.median = median_of(present);
            for (std::size_t i = 0; i < n; ++i) {
                double v;
                ds.x(i, cj) = csv::parse_double((*usable[i])[j], v) ? v : kind.median;
            }
        } else {
            kind.tag = ColumnKind::Tag::Nominal;
            std::set<std::string> levels;
            for (auto* row : usable)
                if (!is_missing((*row)[j])) levels.insert((*row)[j]);
            kind.levels.assign(levels.begin(), levels.end());
            for (std::size_t i = 0; i < n; ++i) {
                const std::string& v = (*usable[i])[j];
                if (is_missing(v)) {
                    ds.x(i, cj) = -1.0;  // becomes an all-zero dummy block
                } else {
                    auto it = std::lower_bound(kind.levels.begin(), kind.levels.end(), v);
                    ds.x(i, cj) = static_cast<double>(it - kind.levels.begin());
                }
            }
        }
        ds.column_kinds.push_back(std::move(kind));
    }
    return ds;
}

Dataset load_csv(const std::string& path, const std::string& target_column, TaskKind task,
                 const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("FileNotFound", "cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_csv_text(text, target_column, task, options);
}

Dataset dummy_encode(const Dataset& dataset, std::size_t max_levels) {
    if (!dataset.has_nominal()) return dataset;

    Dataset out;
    out.y = dataset.y;
    out.task = dataset.task;
    out.target_column = dataset.target_column;
    out.dropped_rows = dataset.dropped_rows;

    std::size_t n = dataset.n();
    std::size_t p_out = 0;
    for (std::size_t j = 0; j < dataset.p(); ++j) {
        const ColumnKind& k = dataset.column_kinds[j];
        if (k.tag == ColumnKind::Tag::Nominal) {
            if (k.levels.size() > max_levels)
                fail("TooManyLevels", "column '" + dataset.column_names[j] + "' has " +
                                          std::to_string(k.levels.size()) + " levels (cap " +
                                          std::to_string(max_levels) + ")");
            p_out += k.levels.size();
        } else {
            ++p_out;
        }
    }

    out.x = Matrix(n, p_out);
    std::size_t cj = 0;
    for (std::size_t j = 0; j < dataset.p(); ++j) {
        const ColumnKind& k = dataset.column_kinds[j];
        if (k.tag == ColumnKind::Tag::Nominal) {
            for (std::size_t l = 0; l < k.levels.size(); ++l) {
                ColumnKind dk;
                dk.tag = ColumnKind::Tag::Dummy;
                dk.origin = dataset.column_names[j];
                dk.level = k.levels[l];
                out.column_kinds.push_back(dk);
                out.column_names.push_back(dataset.column_names[j] + "=" + k.levels[l]);
                for (std::size_t i = 0; i < n; ++i)
                    out.x(i, cj) =
                        dataset.x(i, j) == static_cast<double>(l) ? 1.0 : 0.0;
                ++cj;
            }
        } else {
            out.column_kinds.push_back(k);
            out.column_names.push_back(dataset.column_names[j]);
            for (std::size_t i = 0; i < n; ++i) out.x(i, cj) = dataset.x(i, j);
            ++cj;
        }
    }
    return out;
}

std::pair<Dataset, Dataset> train_test_split(const Dataset& dataset, double test_fraction,
                                             std::uint64_t seed) {
    std::size_t n = dataset.n();
    auto test_count = static_cast<std::size_t>(std::llround(static_cast<double>(n) * test_fraction));
    if (test_count == 0 || test_count >= n)
        fail("DegenerateSplit", "test fraction " + std::to_string(test_fraction) +
                                    " leaves an empty side for n=" + std::to_string(n));

    Rng rng(mix_seed(seed, "train_test_split"));
    std::vector<int> test_idx;

    if (dataset.task == TaskKind::Classification) {
        std::vector<int> by_class[2];
        for (std::size_t i = 0; i < n; ++i)
            by_class[dataset.y[i] > 0.5 ? 1 : 0].push_back(static_cast<int>(i));
        // Largest-remainder apportionment of the test count across classes.
        double quota0 = test_fraction * static_cast<double>(by_class[0].size());
        std::size_t take0 = static_cast<std::size_t>(quota0);
        std::size_t take1 = test_count > take0 ? test_count - take0 : 0;
        if (take1 > by_class[1].size()) {
            take0 += take1 - by_class[1].size();
            take1 = by_class[1].size();
        }
        std::size_t takes[2] = {std::min(take0, by_class[0].size()), take1};
        for (int c = 0; c < 2; ++c) {
            rng.shuffle(by_class[c]);
            test_idx.insert(test_idx.end(), by_class[c].begin(),
                            by_class[c].begin() + static_cast<long>(takes[c]));
        }
    } else {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        test_idx.assign(order.begin(), order.begin() + static_cast<long>(test_count));
    }

    std::vector<char> in_test(n, 0);
    for (int i : test_idx) in_test[static_cast<std::size_t>(i)] = 1;
    std::vector<int> train_idx;
    for (std::size_t i = 0; i < n; ++i)
        if (!in_test[i]) train_idx.push_back(static_cast<int>(i));

    Dataset train = dataset.take_rows(train_idx);
    std::sort(test_idx.begin(), test_idx.end());
    Dataset test = dataset.take_rows(test_idx);

    if (train.n() == 0 || test.n() == 0)
        fail("DegenerateSplit", "split produced an empty side");
    if (dataset.task == TaskKind::Classification) {
        auto single_class = [](const Dataset& d) {
            bool has0 = false, has1 = false;
            for (double v : d.y) (v > 0.5 ? has1 : has0) = true;
            return !(has0 && has1);
        };
        if (single_class(train))
            fail("DegenerateSplit", "training side is single-class");
    }
    return {std::move(train), std::move(test)};
}

ScalingParams compute_scaling(const Matrix& x) {
    ScalingParams params;
    std::size_t n = x.rows(), p = x.cols();
    params.means.assign(p, 0.0);
    params.stddevs.assign(p, 1.0);
    for (std::size_t j = 0; j < p; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += x(i, j);
        mean /= static_cast<double>(n);
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = x(i, j) - mean;
            ss += d * d;
        }
        double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
        params.means[j] = mean;
        params.stddevs[j] = sd > 0.0 ? sd : 1.0;
    }
    return params;
}

Matrix apply_scaling(const Matrix& x, const ScalingParams& params) {
    Matrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            out(i, j) = (x(i, j) - params.means[j]) / params.stddevs[j];
    return out;
}

Matrix invert_scaling(const Matrix& x, const ScalingParams& params) {
    Matrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            out(i, j) = x(i, j) * params.stddevs[j] + params.means[j];
    return out;
}

std::pair<Dataset, ScalingParams> standardize(const Dataset& dataset) {
    ScalingParams params = compute_scaling(dataset.x);
    Dataset out = dataset;
    out.x = apply_scaling(dataset.x, params);
    return {std::move(out), std::move(params)};
}

void write_dataset_manifest(const std::string& path, const Dataset& dataset,
                            std::uint64_t seed) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("FileWrite", "cannot open " + path);
    out << "target_column=" << dataset.target_column << '\n';
    out << "task=" << to_string(dataset.task) << '\n';
    out << "seed=" << seed << '\n';
    out << "rows=" << dataset.n() << '\n';
    out << "columns=" << dataset.p() << '\n';
    out << "dropped_rows=" << dataset.dropped_rows << '\n';
}

}  // namespace synthtree
