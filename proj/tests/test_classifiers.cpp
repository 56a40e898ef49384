#include <gtest/gtest.h>

#include <vocalfeat/classifiers/model.hpp>
#include <vocalfeat/data/dataset.hpp>

#include "oracles.hpp"

using namespace vocalfeat;

namespace {

struct Blobs {
    Matrix x;
    std::vector<int> y;
};

/// Gaussian blobs with centres `sep` apart along distinct axes.
Blobs blobs(std::size_t classes, std::size_t per_class, std::size_t dims, double sep, std::uint64_t seed) {
    Rng rng(seed);
    Blobs b{Matrix(classes * per_class, dims), {}};
    for (std::size_t c = 0; c < classes; ++c)
        for (std::size_t i = 0; i < per_class; ++i) {
            const std::size_t r = c * per_class + i;
            for (std::size_t d = 0; d < dims; ++d) b.x(r, d) = rng.normal() + (d == c % dims ? sep : 0.0);
            b.y.push_back(static_cast<int>(c));
        }
    return b;
}

template <class Predict>
double accuracy(const Blobs& b, Predict&& predict) {
    std::size_t ok = 0;
    for (std::size_t r = 0; r < b.x.rows(); ++r) ok += predict(b.x.row(r)) == b.y[r];
    return static_cast<double>(ok) / static_cast<double>(b.x.rows());
}

LabeledDataset as_dataset(const Blobs& b) {
    std::vector<std::string> names;
    for (int c : b.y) names.push_back("c" + std::to_string(c));
    std::vector<int> ids;
    for (std::size_t d = 0; d < b.x.cols(); ++d) ids.push_back(static_cast<int>(d + 1));
    return make_dataset(b.x, names, ids);
}

} // namespace

TEST(Knn, Examples) {
    const auto x = Matrix::from_rows({{0.0}, {1.0}, {10.0}});
    const auto m = train_knn(x, {0, 0, 1}, 2, 1, false);
    EXPECT_EQ(predict_knn(m, std::vector<double>{0.2}), 0);
    EXPECT_EQ(predict_knn(m, std::vector<double>{8.0}), 1);
    // Exact distance tie: the lower index wins.
    const auto tie = train_knn(Matrix::from_rows({{-1.0}, {1.0}}), {1, 0}, 2, 1, false);
    EXPECT_EQ(predict_knn(tie, std::vector<double>{0.0}), 1);
}

TEST(Knn, VoteTieGoesToNearest) {
    const auto x = Matrix::from_rows({{0.0}, {3.0}, {-2.0}, {5.0}});
    const auto m = train_knn(x, {0, 1, 1, 0}, 2, 4, false);
    EXPECT_EQ(predict_knn(m, std::vector<double>{0.5}), 0);
    EXPECT_EQ(predict_knn(m, std::vector<double>{2.9}), 1);
}

TEST(Knn, TrainingPointsRecovered) {
    const auto b = blobs(3, 10, 4, 0.5, 2);
    const auto m = train_knn(b.x, b.y, 3);
    EXPECT_DOUBLE_EQ(accuracy(b, [&](auto r) { return predict_knn(m, r); }), 1.0);
    EXPECT_THROW(predict_knn(m, std::vector<double>{1.0}), Error);
    EXPECT_THROW(train_knn(b.x, b.y, 3, 31), Error);
}

TEST(Msvm, SeparatesWellSpacedBlobs) {
    const auto b = blobs(2, 30, 3, 8.0, 5);
    const auto m = train_msvm(b.x, b.y, 2, 0.01, 50, 1);
    EXPECT_DOUBLE_EQ(accuracy(b, [&](auto r) { return predict_msvm(m, r); }), 1.0);
}

TEST(Msvm, FiveClasses) {
    const auto b = blobs(5, 30, 5, 6.0, 6);
    const auto m = train_msvm(b.x, b.y, 5, 0.01, 100, 3);
    EXPECT_GE(accuracy(b, [&](auto r) { return predict_msvm(m, r); }), 0.95);
}

TEST(Msvm, ZeroEpochsPredictsFirstClass) {
    const auto b = blobs(3, 5, 2, 4.0, 7);
    const auto m = train_msvm(b.x, b.y, 3, 0.01, 0, 1);
    for (std::size_t r = 0; r < b.x.rows(); ++r) EXPECT_EQ(predict_msvm(m, b.x.row(r)), 0);
}

TEST(Msvm, Errors) {
    const auto b = blobs(2, 5, 2, 4.0, 7);
    EXPECT_THROW(train_msvm(b.x, std::vector<int>(10, 1), 2, 0.01, 10, 1), Error);
    try {
        train_msvm(b.x, std::vector<int>(10, 1), 2, 0.01, 10, 1);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::single_class);
    }
    EXPECT_THROW(train_msvm(b.x, b.y, 2, 0.0, 10, 1), Error);
}

TEST(Msvm, Deterministic) {
    const auto b = blobs(3, 10, 3, 2.0, 8);
    EXPECT_EQ(train_msvm(b.x, b.y, 3, 0.01, 20, 4).weights, train_msvm(b.x, b.y, 3, 0.01, 20, 4).weights);
}

TEST(Mlp, LearnsXor) {
    const auto x = Matrix::from_rows({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    const std::vector<int> y{0, 1, 1, 0};
    const auto m = train_mlp(x, y, 2, 8, 0.5, 3000, 3);
    for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(predict_mlp(m, x.row(r)), y[r]);
}

TEST(Mlp, GradientMatchesFiniteDifferences) {
    const auto b = blobs(3, 4, 3, 1.0, 9);
    auto p = mlp_init(3, 5, 3, 11);
    const auto g = mlp_gradient(p, b.x, b.y).flatten();
    auto flat = p.flatten();
    const double h = 1e-6;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        auto plus = flat, minus = flat;
        plus[i] += h;
        minus[i] -= h;
        MlpParams a = p, c = p;
        a.assign(plus);
        c.assign(minus);
        const double num = (mlp_loss(a, b.x, b.y) - mlp_loss(c, b.x, b.y)) / (2 * h);
        EXPECT_NEAR(g[i], num, 1e-4) << "parameter " << i;
    }
}

TEST(Mlp, DeterministicAndLossDecreases) {
    const auto b = blobs(3, 10, 3, 2.0, 10);
    const auto a = train_mlp(b.x, b.y, 3, 6, 1e-3, 50, 2);
    const auto c = train_mlp(b.x, b.y, 3, 6, 1e-3, 50, 2);
    EXPECT_EQ(a.params.flatten(), c.params.flatten());
    ASSERT_GE(a.loss_history.size(), 2u);
    for (std::size_t i = 1; i < a.loss_history.size(); ++i) EXPECT_LE(a.loss_history[i], a.loss_history[i - 1] + 1e-12);
    const auto probs = mlp_probabilities(a, b.x.row(0));
    double sum = 0.0;
    for (double v : probs) sum += v;
    EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(AdaBoost, OneDimensionalSeparableInOneRound) {
    const auto x = Matrix::from_rows({{1}, {2}, {3}, {4}});
    const auto m = train_adaboost(x, {-1, -1, 1, 1}, 10);
    ASSERT_EQ(m.stumps.size(), 1u);
    EXPECT_DOUBLE_EQ(m.stumps[0].threshold, 2.5);
    EXPECT_DOUBLE_EQ(m.round_errors[0], 0.0);
    EXPECT_DOUBLE_EQ(m.stumps[0].alpha, kPerfectStumpAlpha);
    EXPECT_EQ(predict_adaboost(m, std::vector<double>{0.0}), -1);
    EXPECT_EQ(predict_adaboost(m, std::vector<double>{9.0}), 1);
}

TEST(AdaBoost, PlantedFeatureGetsTheMostWeight) {
    // One informative column among ten, 40 samples, 10 rounds.
    int hits = 0;
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        Rng rng(100 + trial);
        Matrix x(40, 10);
        std::vector<int> y;
        for (std::size_t r = 0; r < 40; ++r) {
            const int label = r % 2 ? 1 : -1;
            for (std::size_t c = 0; c < 10; ++c) x(r, c) = rng.normal();
            x(r, 4) = label + 0.7 * rng.normal();
            y.push_back(label);
        }
        const auto m = train_adaboost(x, y, 10);
        const auto top = std::max_element(m.feature_weights.begin(), m.feature_weights.end()) - m.feature_weights.begin();
        hits += top == 4;
        std::size_t oracle_feature = 99;
        const std::vector<double> w(40, 1.0 / 40.0);
        EXPECT_NEAR(m.round_errors[0], oracle::best_stump_error(x, y, w, &oracle_feature), 1e-12);
        EXPECT_EQ(m.stumps[0].feature, oracle_feature);
    }
    EXPECT_EQ(hits, 20);
}

TEST(AdaBoost, PerfectStumpHasZeroError) {
    const auto x = Matrix::from_rows({{0.1, 5}, {0.2, 1}, {0.7, 4}, {0.9, 2}, {0.35, 3}});
    const auto m = train_adaboost(x, {-1, -1, 1, 1, -1}, 5);
    ASSERT_EQ(m.stumps.size(), 1u);
    EXPECT_EQ(m.round_errors[0], 0.0);
    EXPECT_EQ(m.training_errors[0], 0.0);
}

TEST(AdaBoost, RoundErrorsAndBound) {
    const auto b = blobs(2, 40, 4, 1.0, 12);
    std::vector<int> y;
    for (int c : b.y) y.push_back(c ? 1 : -1);
    const auto m = train_adaboost(b.x, y, 30);
    for (std::size_t t = 0; t < m.stumps.size(); ++t) {
        EXPECT_LT(m.round_errors[t], 0.5);
        EXPECT_GE(m.error_bounds[t] + 1e-12, m.training_errors[t]);
    }
    std::vector<double> w(y.size(), 1.0 / static_cast<double>(y.size()));
    EXPECT_NEAR(m.round_errors[0], oracle::best_stump_error(b.x, y, w), 1e-12);
}

TEST(AdaBoost, Errors) {
    const auto x = Matrix::from_rows({{1}, {1}});
    EXPECT_THROW(train_adaboost(x, {1, 1}, 3), Error);
    EXPECT_THROW(train_adaboost(x, {1, 2}, 3), Error);
    try {
        train_adaboost(x, {1, -1}, 3);
        ADD_FAILURE() << "identical rows with opposite labels should not train";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::training_failed);
    }
}

TEST(Pca, LineIsOneComponent) {
    Matrix x(20, 2);
    for (std::size_t r = 0; r < 20; ++r) {
        x(r, 0) = static_cast<double>(r) - 7.0;
        x(r, 1) = 2.0 * x(r, 0);
    }
    const auto m = pca_fit(x, 1);
    EXPECT_NEAR(m.components(0, 0), 1.0 / std::sqrt(5.0), 1e-9);
    EXPECT_NEAR(m.components(0, 1), 2.0 / std::sqrt(5.0), 1e-9);
    EXPECT_NEAR(m.explained_ratio(), 1.0, 1e-9);
    EXPECT_NEAR(m.eigenvalues[1], 0.0, 1e-9);
    for (std::size_t r = 0; r < 20; ++r) {
        const auto back = m.reconstruct(m.project(x.row(r)));
        EXPECT_NEAR(back[0], x(r, 0), 1e-9);
        EXPECT_NEAR(back[1], x(r, 1), 1e-9);
    }
}

TEST(Pca, FullRankReconstructsAndComponentsOrthonormal) {
    const auto b = blobs(2, 15, 4, 1.0, 13);
    const auto m = pca_fit(b.x, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            double dot = 0.0;
            for (std::size_t c = 0; c < 4; ++c) dot += m.components(i, c) * m.components(j, c);
            EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-9);
        }
    for (std::size_t i = 1; i < 4; ++i) EXPECT_GE(m.eigenvalues[i - 1], m.eigenvalues[i]);
    const auto back = m.reconstruct(m.project(b.x.row(3)));
    for (std::size_t c = 0; c < 4; ++c) EXPECT_NEAR(back[c], b.x(3, c), 1e-9);
    EXPECT_FALSE(m.rank_deficient);
    EXPECT_THROW(pca_fit(b.x, 5), Error);
}

TEST(Pca, IsotropicSpreadsVarianceEvenly) {
    Matrix x(4, 2);
    x(0, 0) = 1;
    x(1, 0) = -1;
    x(2, 1) = 1;
    x(3, 1) = -1;
    const auto m = pca_fit(x, 1);
    EXPECT_NEAR(m.explained_ratio(), 0.5, 1e-12);
}

TEST(PcaKnn, ClassifiesBlobs) {
    const auto b = blobs(3, 20, 6, 5.0, 14);
    const auto m = train_pca_knn(b.x, b.y, 3, 3, 1);
    EXPECT_DOUBLE_EQ(accuracy(b, [&](auto r) { return predict_pca_knn(m, r); }), 1.0);
}

TEST(Model, ParseNames) {
    EXPECT_EQ(parse_classifier("KNN"), ClassifierKind::knn);
    EXPECT_EQ(parse_classifier("m-svm"), ClassifierKind::msvm);
    EXPECT_EQ(parse_classifier("nn"), ClassifierKind::mlp);
    EXPECT_EQ(parse_classifier("pca-knn"), ClassifierKind::pca_knn);
    EXPECT_THROW(parse_classifier("forest"), Error);
}

TEST(Model, PredictRejectsWrongDimension) {
    const auto ds = as_dataset(blobs(2, 10, 3, 3.0, 15));
    for (auto kind : {ClassifierKind::knn, ClassifierKind::msvm, ClassifierKind::mlp, ClassifierKind::adaboost,
                      ClassifierKind::pca_knn}) {
        TrainConfig cfg;
        cfg.mlp_epochs = 20;
        cfg.pca_dims = 2;
        const auto m = train(kind, ds, cfg);
        try {
            predict(m, std::vector<double>{1.0, 2.0});
            ADD_FAILURE() << to_string(kind);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::dimension_mismatch);
        }
    }
}

TEST(Model, JsonRoundTripPreservesPredictions) {
    const auto b = blobs(2, 15, 4, 2.0, 16);
    const auto ds = as_dataset(b);
    for (auto kind : {ClassifierKind::knn, ClassifierKind::msvm, ClassifierKind::mlp, ClassifierKind::adaboost,
                      ClassifierKind::pca_knn}) {
        TrainConfig cfg;
        cfg.mlp_epochs = 30;
        cfg.pca_dims = 2;
        const auto m = train(kind, ds, cfg);
        const auto text = model_to_json(m).dump();
        const auto back = model_from_json(nlohmann::json::parse(text));
        EXPECT_EQ(back.kind, kind);
        EXPECT_EQ(back.class_names, m.class_names);
        EXPECT_EQ(back.feature_subset, m.feature_subset);
        for (std::size_t r = 0; r < b.x.rows(); ++r) EXPECT_EQ(predict(back, b.x.row(r)), predict(m, b.x.row(r)));
        EXPECT_EQ(model_to_json(back).dump(), text);
    }
    EXPECT_THROW(model_from_json(nlohmann::json{{"format", "other"}}), Error);
}
