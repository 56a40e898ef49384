#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../features/catalogue.hpp"
#include "../features/extract.hpp"
#include "../matrix.hpp"
#include "csv.hpp"

namespace vocalfeat {

inline const std::vector<std::string>& canonical_emotions() {
    static const std::vector<std::string> e{"anger", "fear", "happiness", "neutral", "sadness"};
    return e;
}

/// N samples over a set of labelled feature columns with integer class ids.
struct LabeledDataset {
    Matrix features;
    std::vector<int> labels;
    std::vector<std::string> class_names;
    /// Feature label (1..84) of each column.
    std::vector<int> feature_ids;
    std::vector<std::string> sample_ids;
    std::string corpus_id;

    std::size_t size() const noexcept { return labels.size(); }
    std::size_t dims() const noexcept { return features.cols(); }
    std::size_t n_classes() const noexcept { return class_names.size(); }

    std::vector<std::size_t> class_counts() const {
        std::vector<std::size_t> c(n_classes(), 0);
        for (int y : labels) ++c[static_cast<std::size_t>(y)];
        return c;
    }

    std::size_t distinct_classes() const {
        const auto c = class_counts();
        return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](std::size_t v) { return v > 0; }));
    }

    int class_index(const std::string& name) const {
        const auto it = std::find(class_names.begin(), class_names.end(), name);
        return it == class_names.end() ? -1 : static_cast<int>(it - class_names.begin());
    }

    void validate() const {
        require(features.rows() == labels.size(), "label count differs from row count", ErrorCode::length_mismatch);
        require(feature_ids.size() == features.cols(), "feature id count differs from column count",
                ErrorCode::dimension_mismatch);
        for (int y : labels)
            require(y >= 0 && static_cast<std::size_t>(y) < class_names.size(), "label index out of range");
        for (int f : feature_ids) require(f >= 1 && f <= kNumFeatures, "feature id out of range", ErrorCode::unknown_feature);
    }
};

inline std::vector<int> all_feature_ids() {
    std::vector<int> ids(kNumFeatures);
    std::iota(ids.begin(), ids.end(), 1);
    return ids;
}

/// Builds a dataset from raw rows; class ids follow the sorted label names.
inline LabeledDataset make_dataset(const Matrix& x, const std::vector<std::string>& label_names,
                                   std::vector<int> feature_ids = {}, std::string corpus_id = {},
                                   std::vector<std::string> sample_ids = {}) {
    require(x.rows() == label_names.size(), "label count differs from row count", ErrorCode::length_mismatch);
    require(x.rows() > 0, "dataset has no rows", ErrorCode::empty_data);
    LabeledDataset ds;
    ds.features = x;
    ds.class_names = label_names;
    std::sort(ds.class_names.begin(), ds.class_names.end());
    ds.class_names.erase(std::unique(ds.class_names.begin(), ds.class_names.end()), ds.class_names.end());
    for (const auto& name : label_names) {
        require(!name.empty(), "empty class label");
        ds.labels.push_back(ds.class_index(name));
    }
    if (feature_ids.empty()) {
        feature_ids.resize(x.cols());
        std::iota(feature_ids.begin(), feature_ids.end(), 1);
    }
    ds.feature_ids = std::move(feature_ids);
    if (sample_ids.empty())
        for (std::size_t i = 0; i < x.rows(); ++i) sample_ids.push_back(std::to_string(i));
    require(sample_ids.size() == x.rows(), "sample id count differs from row count", ErrorCode::length_mismatch);
    ds.sample_ids = std::move(sample_ids);
    ds.corpus_id = std::move(corpus_id);
    ds.validate();
    return ds;
}

inline LabeledDataset make_dataset(const std::vector<FeatureVector>& rows, const std::string& corpus_id,
                                   std::vector<std::string> sample_ids = {}) {
    Matrix x(rows.size(), kNumFeatures);
    std::vector<std::string> names;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int c = 0; c < kNumFeatures; ++c) x(r, static_cast<std::size_t>(c)) = rows[r].values[static_cast<std::size_t>(c)];
        names.push_back(rows[r].label);
    }
    return make_dataset(x, names, all_feature_ids(), corpus_id, std::move(sample_ids));
}

/// Restricts to the given feature labels, in the given order.
inline LabeledDataset select_features(const LabeledDataset& ds, const std::vector<int>& feature_ids) {
    require(!feature_ids.empty(), "feature subset is empty", ErrorCode::empty_subset);
    std::vector<std::size_t> cols;
    for (int f : feature_ids) {
        const auto it = std::find(ds.feature_ids.begin(), ds.feature_ids.end(), f);
        require(it != ds.feature_ids.end(), "dataset has no column x" + std::to_string(f), ErrorCode::unknown_feature);
        cols.push_back(static_cast<std::size_t>(it - ds.feature_ids.begin()));
    }
    LabeledDataset out = ds;
    out.features = ds.features.select_columns(cols);
    out.feature_ids = feature_ids;
    return out;
}

inline LabeledDataset select_rows(const LabeledDataset& ds, const std::vector<std::size_t>& rows) {
    LabeledDataset out;
    out.features = ds.features.select_rows(rows);
    for (std::size_t r : rows) {
        out.labels.push_back(ds.labels[r]);
        out.sample_ids.push_back(ds.sample_ids[r]);
    }
    out.class_names = ds.class_names;
    out.feature_ids = ds.feature_ids;
    out.corpus_id = ds.corpus_id;
    return out;
}

inline std::string dataset_to_csv(const LabeledDataset& ds) {
    std::string out = "sample_id,corpus,label";
    for (int f : ds.feature_ids) out += ",x" + std::to_string(f);
    out += '\n';
    for (std::size_t r = 0; r < ds.size(); ++r) {
        out += csv::quote(ds.sample_ids[r]) + ',' + csv::quote(ds.corpus_id) + ',' +
               csv::quote(ds.class_names[static_cast<std::size_t>(ds.labels[r])]);
        for (std::size_t c = 0; c < ds.dims(); ++c) out += ',' + csv::format_double(ds.features(r, c));
        out += '\n';
    }
    return out;
}

inline LabeledDataset dataset_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::parse_error, "dataset CSV is empty");
    const auto header = csv::split_line(line);
    if (header.size() < 4 || header[0] != "sample_id" || header[1] != "corpus" || header[2] != "label")
        throw Error(ErrorCode::parse_error, "dataset CSV header must start with sample_id,corpus,label");
    std::vector<int> ids;
    for (std::size_t i = 3; i < header.size(); ++i) ids.push_back(label_of(header[i]).index);

    std::vector<std::vector<double>> rows;
    std::vector<std::string> names, sample_ids;
    std::string corpus;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        const auto fields = csv::split_line(line);
        if (fields.size() != header.size())
            throw Error(ErrorCode::parse_error, "dataset CSV line " + std::to_string(lineno) + ": wrong field count");
        sample_ids.push_back(fields[0]);
        corpus = fields[1];
        names.push_back(fields[2]);
        std::vector<double> row;
        for (std::size_t i = 3; i < fields.size(); ++i) {
            try {
                row.push_back(std::stod(fields[i]));
            } catch (const std::logic_error&) {
                throw Error(ErrorCode::parse_error, "dataset CSV line " + std::to_string(lineno) + ": bad number");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error(ErrorCode::empty_data, "dataset CSV has no rows");
    return make_dataset(Matrix::from_rows(rows), names, ids, corpus, sample_ids);
}

inline LabeledDataset read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::file_not_found, "cannot open dataset " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return dataset_from_csv(ss.str());
}

inline void write_dataset(const std::filesystem::path& path, const LabeledDataset& ds) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::io_error, "cannot write dataset " + path.string());
    out << dataset_to_csv(ds);
}

} // namespace vocalfeat
