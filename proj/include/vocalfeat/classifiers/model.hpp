#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

#include "../data/dataset.hpp"
#include "../error.hpp"
#include "adaboost.hpp"
#include "knn.hpp"
#include "mlp.hpp"
#include "msvm.hpp"
#include "pca.hpp"

namespace vocalfeat {

enum class ClassifierKind { knn, msvm, mlp, adaboost, pca_knn };

inline const char* to_string(ClassifierKind k) {
    switch (k) {
    case ClassifierKind::knn: return "knn";
    case ClassifierKind::msvm: return "msvm";
    case ClassifierKind::mlp: return "mlp";
    case ClassifierKind::adaboost: return "adaboost";
    case ClassifierKind::pca_knn: return "pca_knn";
    }
    return "unknown";
}

inline ClassifierKind parse_classifier(std::string name) {
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    if (name == "knn") return ClassifierKind::knn;
    if (name == "msvm" || name == "svm" || name == "m-svm") return ClassifierKind::msvm;
    if (name == "mlp" || name == "nn") return ClassifierKind::mlp;
    if (name == "adaboost") return ClassifierKind::adaboost;
    if (name == "pca_knn" || name == "pca-knn") return ClassifierKind::pca_knn;
    throw Error(ErrorCode::invalid_argument, "unknown classifier: " + name);
}

struct TrainConfig {
    std::size_t knn_k = 1;
    double svm_lambda = 0.01;
    std::size_t svm_epochs = 100;
    std::size_t mlp_hidden = 20;
    double mlp_lr = 0.05;
    std::size_t mlp_epochs = 500;
    std::size_t boost_rounds = 50;
    std::size_t pca_dims = 10;
    std::uint64_t seed = 42;

    /// Epoch counts may be zero; everything else must be positive.
    void validate() const {
        require(knn_k >= 1, "knn_k must be positive");
        require(svm_lambda > 0.0, "svm_lambda must be positive");
        require(mlp_hidden >= 1, "mlp_hidden must be positive");
        require(mlp_lr > 0.0, "mlp_lr must be positive");
        require(boost_rounds >= 1, "boost_rounds must be positive");
        require(pca_dims >= 1, "pca_dims must be positive");
    }
};

struct TrainedModel {
    ClassifierKind kind = ClassifierKind::knn;
    std::variant<KnnModel, MsvmModel, MlpModel, AdaBoostModel, PcaKnnModel> params;
    std::vector<int> feature_subset;
    std::vector<std::string> class_names;
    TrainConfig config;

    int n_classes() const { return static_cast<int>(class_names.size()); }
};

inline TrainedModel train(ClassifierKind kind, const LabeledDataset& ds, const TrainConfig& cfg = {}) {
    cfg.validate();
    require(ds.size() > 0, "training set is empty", ErrorCode::empty_data);
    require(ds.dims() > 0, "training set has no features", ErrorCode::empty_subset);
    TrainedModel m;
    m.kind = kind;
    m.feature_subset = ds.feature_ids;
    m.class_names = ds.class_names;
    m.config = cfg;
    const int nc = static_cast<int>(ds.n_classes());
    switch (kind) {
    case ClassifierKind::knn:
        m.params = train_knn(ds.features, ds.labels, nc, cfg.knn_k);
        break;
    case ClassifierKind::msvm:
        m.params = train_msvm(ds.features, ds.labels, nc, cfg.svm_lambda, cfg.svm_epochs, cfg.seed);
        break;
    case ClassifierKind::mlp:
        m.params = train_mlp(ds.features, ds.labels, nc, cfg.mlp_hidden, cfg.mlp_lr, cfg.mlp_epochs, cfg.seed);
        break;
    case ClassifierKind::adaboost: {
        require(nc == 2, "AdaBoost needs exactly two classes");
        std::vector<int> y;
        for (int c : ds.labels) y.push_back(c == 1 ? 1 : -1);
        m.params = train_adaboost(ds.features, y, cfg.boost_rounds);
        break;
    }
    case ClassifierKind::pca_knn:
        m.params = train_pca_knn(ds.features, ds.labels, nc, std::min(cfg.pca_dims, ds.dims()), cfg.knn_k);
        break;
    }
    return m;
}

/// Class index for one feature vector in the model's column order.
inline int predict(const TrainedModel& m, std::span<const double> x) {
    require(x.size() == m.feature_subset.size(), "feature vector has " + std::to_string(x.size()) +
                                                     " values, model expects " +
                                                     std::to_string(m.feature_subset.size()),
            ErrorCode::dimension_mismatch);
    return std::visit(
        [&](const auto& p) -> int {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, KnnModel>) return predict_knn(p, x);
            else if constexpr (std::is_same_v<T, MsvmModel>) return predict_msvm(p, x);
            else if constexpr (std::is_same_v<T, MlpModel>) return predict_mlp(p, x);
            else if constexpr (std::is_same_v<T, AdaBoostModel>) return predict_adaboost(p, x) > 0 ? 1 : 0;
            else return predict_pca_knn(p, x);
        },
        m.params);
}

inline const std::string& predict_label(const TrainedModel& m, std::span<const double> x) {
    return m.class_names.at(static_cast<std::size_t>(predict(m, x)));
}

// JSON serialization

inline constexpr int kModelFormatVersion = 1;

namespace detail {

using nlohmann::json;

inline json matrix_to_json(const Matrix& m) { return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", m.data()}}; }

inline Matrix matrix_from_json(const json& j) {
    Matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    m.data() = j.at("data").get<std::vector<double>>();
    require(m.data().size() == m.rows() * m.cols(), "matrix payload size mismatch", ErrorCode::parse_error);
    return m;
}

inline json standardizer_to_json(const Standardizer& s) { return {{"mean", s.mean}, {"scale", s.scale}}; }

inline Standardizer standardizer_from_json(const json& j) {
    return {j.at("mean").get<std::vector<double>>(), j.at("scale").get<std::vector<double>>()};
}

inline json knn_to_json(const KnnModel& m) {
    return {{"k", m.k}, {"standardizer", standardizer_to_json(m.standardizer)},
            {"points", matrix_to_json(m.points)}, {"labels", m.labels}, {"n_classes", m.n_classes}};
}

inline KnnModel knn_from_json(const json& j) {
    KnnModel m;
    m.k = j.at("k").get<std::size_t>();
    m.standardizer = standardizer_from_json(j.at("standardizer"));
    m.points = matrix_from_json(j.at("points"));
    m.labels = j.at("labels").get<std::vector<int>>();
    m.n_classes = j.at("n_classes").get<int>();
    return m;
}

inline json pca_to_json(const PcaModel& p) {
    return {{"mean", p.mean}, {"components", matrix_to_json(p.components)}, {"eigenvalues", p.eigenvalues},
            {"rank_deficient", p.rank_deficient}};
}

inline PcaModel pca_from_json(const json& j) {
    PcaModel p;
    p.mean = j.at("mean").get<std::vector<double>>();
    p.components = matrix_from_json(j.at("components"));
    p.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
    p.rank_deficient = j.at("rank_deficient").get<bool>();
    return p;
}

inline json config_to_json(const TrainConfig& c) {
    return {{"knn_k", c.knn_k},           {"svm_lambda", c.svm_lambda}, {"svm_epochs", c.svm_epochs},
            {"mlp_hidden", c.mlp_hidden}, {"mlp_lr", c.mlp_lr},         {"mlp_epochs", c.mlp_epochs},
            {"boost_rounds", c.boost_rounds}, {"pca_dims", c.pca_dims}, {"seed", c.seed}};
}

inline TrainConfig config_from_json(const json& j) {
    TrainConfig c;
    c.knn_k = j.at("knn_k").get<std::size_t>();
    c.svm_lambda = j.at("svm_lambda").get<double>();
    c.svm_epochs = j.at("svm_epochs").get<std::size_t>();
    c.mlp_hidden = j.at("mlp_hidden").get<std::size_t>();
    c.mlp_lr = j.at("mlp_lr").get<double>();
    c.mlp_epochs = j.at("mlp_epochs").get<std::size_t>();
    c.boost_rounds = j.at("boost_rounds").get<std::size_t>();
    c.pca_dims = j.at("pca_dims").get<std::size_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

} // namespace detail

inline nlohmann::json model_to_json(const TrainedModel& m) {
    using detail::json;
    json params = std::visit(
        [](const auto& p) -> json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, KnnModel>) {
                return detail::knn_to_json(p);
            } else if constexpr (std::is_same_v<T, MsvmModel>) {
                return {{"standardizer", detail::standardizer_to_json(p.standardizer)},
                        {"weights", detail::matrix_to_json(p.weights)}, {"n_classes", p.n_classes}};
            } else if constexpr (std::is_same_v<T, MlpModel>) {
                return {{"standardizer", detail::standardizer_to_json(p.standardizer)},
                        {"w1", detail::matrix_to_json(p.params.w1)}, {"b1", p.params.b1},
                        {"w2", detail::matrix_to_json(p.params.w2)}, {"b2", p.params.b2},
                        {"n_classes", p.n_classes}};
            } else if constexpr (std::is_same_v<T, AdaBoostModel>) {
                json stumps = json::array();
                for (const auto& s : p.stumps)
                    stumps.push_back({{"feature", s.feature}, {"threshold", s.threshold},
                                      {"polarity", s.polarity}, {"alpha", s.alpha}});
                return {{"stumps", stumps}, {"dims", p.dims}, {"feature_weights", p.feature_weights},
                        {"round_errors", p.round_errors}, {"diagnostic", p.diagnostic}};
            } else {
                return {{"standardizer", detail::standardizer_to_json(p.standardizer)},
                        {"pca", detail::pca_to_json(p.pca)}, {"knn", detail::knn_to_json(p.knn)}};
            }
        },
        m.params);
    return {{"format", "vocalfeat-model"},
            {"version", kModelFormatVersion},
            {"kind", to_string(m.kind)},
            {"feature_subset", m.feature_subset},
            {"class_names", m.class_names},
            {"config", detail::config_to_json(m.config)},
            {"parameters", params}};
}

inline TrainedModel model_from_json(const nlohmann::json& j) {
    try {
        require(j.at("format").get<std::string>() == "vocalfeat-model", "not a model document",
                ErrorCode::parse_error);
        require(j.at("version").get<int>() == kModelFormatVersion, "unsupported model version",
                ErrorCode::parse_error);
        TrainedModel m;
        m.kind = parse_classifier(j.at("kind").get<std::string>());
        m.feature_subset = j.at("feature_subset").get<std::vector<int>>();
        m.class_names = j.at("class_names").get<std::vector<std::string>>();
        m.config = detail::config_from_json(j.at("config"));
        const auto& p = j.at("parameters");
        switch (m.kind) {
        case ClassifierKind::knn:
            m.params = detail::knn_from_json(p);
            break;
        case ClassifierKind::msvm: {
            MsvmModel s;
            s.standardizer = detail::standardizer_from_json(p.at("standardizer"));
            s.weights = detail::matrix_from_json(p.at("weights"));
            s.n_classes = p.at("n_classes").get<int>();
            m.params = s;
            break;
        }
        case ClassifierKind::mlp: {
            MlpModel s;
            s.standardizer = detail::standardizer_from_json(p.at("standardizer"));
            s.params.w1 = detail::matrix_from_json(p.at("w1"));
            s.params.b1 = p.at("b1").get<std::vector<double>>();
            s.params.w2 = detail::matrix_from_json(p.at("w2"));
            s.params.b2 = p.at("b2").get<std::vector<double>>();
            s.n_classes = p.at("n_classes").get<int>();
            m.params = s;
            break;
        }
        case ClassifierKind::adaboost: {
            AdaBoostModel s;
            for (const auto& st : p.at("stumps"))
                s.stumps.push_back({st.at("feature").get<std::size_t>(), st.at("threshold").get<double>(),
                                    st.at("polarity").get<int>(), st.at("alpha").get<double>()});
            s.dims = p.at("dims").get<std::size_t>();
            s.feature_weights = p.at("feature_weights").get<std::vector<double>>();
            s.round_errors = p.at("round_errors").get<std::vector<double>>();
            s.diagnostic = p.at("diagnostic").get<std::string>();
            m.params = s;
            break;
        }
        case ClassifierKind::pca_knn: {
            PcaKnnModel s;
            s.standardizer = detail::standardizer_from_json(p.at("standardizer"));
            s.pca = detail::pca_from_json(p.at("pca"));
            s.knn = detail::knn_from_json(p.at("knn"));
            m.params = s;
            break;
        }
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("malformed model JSON: ") + e.what());
    }
}

} // namespace vocalfeat
