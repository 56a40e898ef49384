#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "../classifiers/model.hpp"
#include "../data/dataset.hpp"
#include "../error.hpp"
#include "../rng.hpp"

namespace vocalfeat {

struct CvConfig {
    enum class Scheme { kfold, leave_one_out };
    Scheme scheme = Scheme::kfold;
    std::size_t k = 10;
    std::uint64_t seed = 0;
    bool stratified = true;

    static CvConfig kfold(std::size_t k, std::uint64_t seed = 0, bool stratified = true) {
        require(k >= 2, "k-fold needs k >= 2");
        return {Scheme::kfold, k, seed, stratified};
    }
    static CvConfig loo() { return {Scheme::leave_one_out, 0, 0, false}; }

    /// Accepts "kfold:<k>" or "loo".
    static CvConfig parse(const std::string& text, std::uint64_t seed = 0) {
        if (text == "loo") return loo();
        if (text.rfind("kfold:", 0) == 0) {
            try {
                return kfold(std::stoul(text.substr(6)), seed);
            } catch (const std::logic_error&) {
            }
        }
        throw Error(ErrorCode::invalid_argument, "cv scheme must be kfold:<k> or loo, got '" + text + "'");
    }

    std::string describe() const {
        return scheme == Scheme::leave_one_out ? "loo" : "kfold:" + std::to_string(k);
    }
};

struct FoldAssignment {
    std::vector<std::size_t> fold_of;
    std::size_t n_folds = 0;
    bool stratified = false;
    std::vector<std::string> warnings;

    std::vector<std::size_t> members(std::size_t fold) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < fold_of.size(); ++i)
            if (fold_of[i] == fold) out.push_back(i);
        return out;
    }
};

inline FoldAssignment kfold_split(std::size_t n, const CvConfig& cfg, const std::vector<int>& labels) {
    require(labels.size() == n, "label count differs from sample count", ErrorCode::length_mismatch);
    FoldAssignment fa;
    fa.fold_of.assign(n, 0);
    if (cfg.scheme == CvConfig::Scheme::leave_one_out) {
        require(n >= 2, "leave-one-out needs at least two samples", ErrorCode::too_few_samples);
        std::iota(fa.fold_of.begin(), fa.fold_of.end(), 0);
        fa.n_folds = n;
        return fa;
    }
    require(cfg.k >= 2, "k-fold needs k >= 2");
    require(n >= cfg.k, "fewer samples than folds", ErrorCode::too_few_samples);
    fa.n_folds = cfg.k;
    Rng rng(cfg.seed);
    bool stratify = cfg.stratified;
    int n_classes = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<std::size_t>> groups(static_cast<std::size_t>(n_classes));
    for (std::size_t i = 0; i < n; ++i) groups[static_cast<std::size_t>(labels[i])].push_back(i);
    if (stratify) {
        for (std::size_t c = 0; c < groups.size(); ++c)
            if (!groups[c].empty() && groups[c].size() < cfg.k) {
                fa.warnings.push_back("class " + std::to_string(c) + " has " + std::to_string(groups[c].size()) +
                                      " samples, fewer than k=" + std::to_string(cfg.k) +
                                      "; using unstratified folds");
                stratify = false;
                break;
            }
    }
    std::size_t counter = 0;
    if (stratify) {
        for (auto& g : groups) {
            rng.shuffle(g);
            for (std::size_t i : g) fa.fold_of[i] = counter++ % cfg.k;
        }
    } else {
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        rng.shuffle(all);
        for (std::size_t i : all) fa.fold_of[i] = counter++ % cfg.k;
    }
    fa.stratified = stratify;
    return fa;
}

struct PerClassRates {
    std::vector<double> recall;
    /// False where the class had no test samples; its recall is reported as 0.
    std::vector<bool> defined;
    double macro = 0.0;
};

inline PerClassRates per_class_rates(const std::vector<std::vector<std::size_t>>& confusion) {
    PerClassRates r;
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t c = 0; c < confusion.size(); ++c) {
        require(confusion[c].size() == confusion.size(), "confusion matrix must be square",
                ErrorCode::dimension_mismatch);
        const std::size_t row = std::accumulate(confusion[c].begin(), confusion[c].end(), std::size_t{0});
        const bool ok = row > 0;
        const double rec = ok ? static_cast<double>(confusion[c][c]) / static_cast<double>(row) : 0.0;
        r.recall.push_back(rec);
        r.defined.push_back(ok);
        if (ok) {
            sum += rec;
            ++count;
        }
    }
    r.macro = count ? sum / static_cast<double>(count) : 0.0;
    return r;
}

struct EvalReport {
    double accuracy = 0.0;
    double fold_mean = 0.0;
    std::vector<double> fold_accuracies;
    std::vector<std::vector<std::size_t>> confusion;
    PerClassRates rates;
    std::vector<std::string> class_names;
    std::vector<int> feature_subset;
    std::string classifier;
    std::string cv;
    std::size_t skipped_folds = 0;
    std::vector<std::string> warnings;
};

inline std::size_t confusion_total(const EvalReport& r) {
    std::size_t t = 0;
    for (const auto& row : r.confusion) t = std::accumulate(row.begin(), row.end(), t);
    return t;
}

/// Fits standardization and model on each training split only.
inline EvalReport cross_validate(const LabeledDataset& full, const std::vector<int>& subset, ClassifierKind kind,
                                 const TrainConfig& tcfg, const CvConfig& cv) {
    require(!subset.empty(), "feature subset is empty", ErrorCode::empty_subset);
    require(full.distinct_classes() >= 2, "dataset has a single class", ErrorCode::single_class);
    const LabeledDataset ds = select_features(full, subset);
    const auto folds = kfold_split(ds.size(), cv, ds.labels);
    EvalReport rep;
    rep.class_names = ds.class_names;
    rep.feature_subset = subset;
    rep.classifier = to_string(kind);
    rep.cv = cv.describe();
    rep.warnings = folds.warnings;
    const std::size_t nc = ds.n_classes();
    rep.confusion.assign(nc, std::vector<std::size_t>(nc, 0));
    std::vector<std::vector<std::size_t>> members(folds.n_folds);
    for (std::size_t i = 0; i < ds.size(); ++i) members[folds.fold_of[i]].push_back(i);
    std::size_t correct = 0, tested = 0;
    for (std::size_t f = 0; f < folds.n_folds; ++f) {
        if (members[f].empty()) continue;
        std::vector<std::size_t> train_rows;
        for (std::size_t i = 0; i < ds.size(); ++i)
            if (folds.fold_of[i] != f) train_rows.push_back(i);
        const LabeledDataset train_set = select_rows(ds, train_rows);
        if (train_set.distinct_classes() < 2) {
            ++rep.skipped_folds;
            rep.warnings.push_back("fold " + std::to_string(f) + " skipped: training split has a single class");
            continue;
        }
        const TrainedModel model = train(kind, train_set, tcfg);
        std::size_t fold_correct = 0;
        for (std::size_t i : members[f]) {
            const int pred = predict(model, ds.features.row(i));
            ++rep.confusion[static_cast<std::size_t>(ds.labels[i])][static_cast<std::size_t>(pred)];
            if (pred == ds.labels[i]) ++fold_correct;
        }
        correct += fold_correct;
        tested += members[f].size();
        rep.fold_accuracies.push_back(static_cast<double>(fold_correct) / static_cast<double>(members[f].size()));
    }
    rep.accuracy = tested ? static_cast<double>(correct) / static_cast<double>(tested) : 0.0;
    if (!rep.fold_accuracies.empty())
        rep.fold_mean = std::accumulate(rep.fold_accuracies.begin(), rep.fold_accuracies.end(), 0.0) /
                        static_cast<double>(rep.fold_accuracies.size());
    rep.rates = per_class_rates(rep.confusion);
    return rep;
}

inline nlohmann::json report_to_json(const EvalReport& r) {
    nlohmann::json per_class = nlohmann::json::array();
    for (std::size_t c = 0; c < r.class_names.size(); ++c)
        per_class.push_back({{"class", r.class_names[c]}, {"recall", r.rates.recall[c]},
                             {"defined", static_cast<bool>(r.rates.defined[c])}});
    nlohmann::json subset = nlohmann::json::array();
    for (int f : r.feature_subset) subset.push_back("x" + std::to_string(f));
    return {{"classifier", r.classifier},
            {"cv", r.cv},
            {"feature_subset", subset},
            {"accuracy", r.accuracy},
            {"fold_mean_accuracy", r.fold_mean},
            {"fold_accuracies", r.fold_accuracies},
            {"class_names", r.class_names},
            {"confusion", r.confusion},
            {"per_class_recall", per_class},
            {"macro_recall", r.rates.macro},
            {"skipped_folds", r.skipped_folds},
            {"warnings", r.warnings}};
}

/// Rows are true classes, columns predicted classes.
inline std::string confusion_to_csv(const EvalReport& r) {
    std::string out = "true\\predicted";
    for (const auto& n : r.class_names) out += ',' + n;
    out += '\n';
    for (std::size_t c = 0; c < r.confusion.size(); ++c) {
        out += r.class_names[c];
        for (std::size_t v : r.confusion[c]) out += ',' + std::to_string(v);
        out += '\n';
    }
    return out;
}

} // namespace vocalfeat
