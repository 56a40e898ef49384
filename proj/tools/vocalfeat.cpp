#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include <vocalfeat/vocalfeat.hpp>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace vocalfeat;

namespace {

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<int> all_labels() { return all_feature_ids(); }

/// "all", a comma list of labels, or a JSON file holding a selection report or a label array.
std::vector<int> parse_subset(const std::string& spec) {
    if (spec == "all") return all_labels();
    if (fs::path(spec).extension() == ".json") {
        const auto j = json::parse(read_text_file(spec));
        const json& arr = j.is_object() ? j.at("result_labels") : j;
        std::vector<int> out;
        for (const auto& v : arr) out.push_back(v.is_number() ? v.get<int>() : label_of(v.get<std::string>()).index);
        return out;
    }
    std::vector<int> out;
    for (const auto& tok : csv::split_line(spec)) out.push_back(label_of(tok).index);
    return out;
}

RankingTable as_table(const std::vector<int>& order, const std::string& dataset, const std::string& source) {
    RankingTable t;
    t.dataset = dataset;
    t.source = source;
    for (std::size_t i = 0; i < order.size(); ++i)
        t.entries.push_back({order[i], static_cast<double>(order.size() - i)});
    return t;
}

struct Common {
    std::uint64_t seed = 0;
    std::size_t knn_k = 1;
    std::string cv = "kfold:10";

    TrainConfig train() const {
        TrainConfig t;
        t.seed = seed;
        t.knn_k = knn_k;
        return t;
    }
};

void add_train_flags(CLI::App* sub, Common& c, bool with_cv) {
    sub->add_option("--seed", c.seed, "Seed for shuffling and initialisation")->capture_default_str();
    sub->add_option("--k", c.knn_k, "Neighbours for knn and pca_knn")->capture_default_str();
    if (with_cv) sub->add_option("--cv", c.cv, "kfold:<k> or loo")->capture_default_str();
}

int run_extract(const std::string& manifest_path, const std::string& out, const std::string& config, unsigned jobs) {
    const auto manifest = read_manifest(manifest_path);
    const auto r = build_dataset(manifest, resolve_config(config), jobs);
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"path", f.path}, {"code", f.code}, {"message", f.message}});
    if (r.dataset) write_dataset(out, *r.dataset);
    const std::size_t rows = r.dataset ? r.dataset->size() : 0;
    std::cout << dump({{"rows", rows}, {"failures", failures.size()}, {"output", r.dataset ? out : ""}});
    if (!r.failures.empty()) {
        std::cerr << json{{"error", "extract"},
                          {"code", "extraction_failed"},
                          {"message", std::to_string(r.failures.size()) + " file(s) skipped"},
                          {"failures", failures}}
                         .dump()
                  << "\n";
        return 1;
    }
    return 0;
}

int run_rank(const std::string& dataset, const std::string& classifier, const std::string& method, const Common& c,
             const std::string& out, const std::string& json_out) {
    const auto ds = read_dataset(dataset);
    RankingTable t;
    std::string label;
    if (!classifier.empty()) {
        const auto kind = parse_classifier(classifier);
        t = rank_individual(ds, kind, c.train(), CvConfig::parse(c.cv, c.seed));
        label = to_string(kind);
    } else {
        FilterConfig fc;
        fc.relief.seed = c.seed;
        const auto m = parse_filter_method(method);
        t = rank_filter(ds, m, fc);
        label = to_string(m);
    }
    write_text(out, ranking_to_csv(t));
    if (!json_out.empty()) write_text(json_out, dump(ranking_to_json(t, label)));
    return 0;
}

int run_select(const std::string& strategy, const std::vector<std::string>& inputs, std::size_t m, std::size_t p,
               const std::string& out) {
    SelectionConfig sc;
    sc.m = m;
    sc.p = p;
    sc.validate();
    std::vector<std::vector<int>> lists;
    for (const auto& in : inputs) lists.push_back(read_ordered_labels(in));
    FeatureSet result;
    if (strategy == "special") {
        result = special_features(lists, p, m);
    } else if (strategy == "common" || strategy == "lang-indep" || strategy == "clf-indep") {
        std::vector<FeatureSet> tops;
        for (std::size_t i = 0; i < lists.size(); ++i) tops.push_back(top_m(lists[i], m, fs::path(inputs[i]).stem().string()));
        result = common_features(tops);
        if (strategy != "common") result.provenance = strategy + ": " + result.provenance;
    } else if (strategy == "full") {
        std::map<std::string, std::map<std::string, RankingTable>> grid;
        for (std::size_t i = 0; i < lists.size(); ++i) {
            const std::string stem = fs::path(inputs[i]).stem().string();
            const auto cut = stem.rfind('_');
            require(cut != std::string::npos && cut > 0 && cut + 1 < stem.size(),
                    "full strategy needs inputs named <dataset>_<classifier>.csv, got " + inputs[i]);
            const std::string d = stem.substr(0, cut), clf = stem.substr(cut + 1);
            grid[d][clf] = as_table(lists[i], d, clf);
        }
        result = fully_independent_classifier_first(grid, m);
        require(result == fully_independent_dataset_first(grid, m), "intersection order changed the result");
    } else {
        throw Error(ErrorCode::invalid_argument, "unknown strategy " + strategy);
    }
    write_text(out, dump(selection_report(strategy, inputs, m, p, result)));
    return 0;
}

int run_evaluate(const std::string& dataset, const std::string& subset, const std::string& classifier, const Common& c,
                 const std::string& out, const std::string& confusion) {
    const auto ds = read_dataset(dataset);
    const auto rep = cross_validate(ds, parse_subset(subset), parse_classifier(classifier), c.train(),
                                    CvConfig::parse(c.cv, c.seed));
    write_text(out, dump(report_to_json(rep)));
    if (!confusion.empty()) write_text(confusion, confusion_to_csv(rep));
    return 0;
}

int run_emotions(const std::string& dataset, std::vector<std::string> emotions, std::size_t rounds,
                 const std::string& out) {
    const auto ds = read_dataset(dataset);
    if (emotions.empty()) emotions = ds.class_names;
    json reports = json::array();
    for (const auto& e : emotions) reports.push_back(emotion_report_json(per_emotion_analysis(ds, e, rounds)));
    write_text(out, dump({{"dataset", dataset}, {"rounds", rounds}, {"emotions", reports}}));
    return 0;
}

int run_train(const std::string& dataset, const std::string& subset, const std::string& classifier, const Common& c,
              const std::string& out) {
    const auto ds = select_features(read_dataset(dataset), parse_subset(subset));
    write_text(out, dump(model_to_json(train(parse_classifier(classifier), ds, c.train()))));
    return 0;
}

int run_predict(const std::string& model_path, const std::string& dataset, const std::string& out) {
    const auto model = model_from_json(json::parse(read_text_file(model_path)));
    const auto ds = select_features(read_dataset(dataset), model.feature_subset);
    std::string text = "sample_id,label,predicted\n";
    for (std::size_t i = 0; i < ds.size(); ++i)
        text += csv::quote(ds.sample_ids[i]) + ',' + csv::quote(ds.class_names[static_cast<std::size_t>(ds.labels[i])]) +
                ',' + csv::quote(predict_label(model, ds.features.row(i))) + '\n';
    write_text(out, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Paralinguistic feature extraction, ranking and selection"};
    app.require_subcommand(1);

    std::string manifest, out, config, dataset, classifier, method, subset = "all", json_out, confusion, wav, model;
    std::string strategy;
    std::vector<std::string> inputs, emotions;
    unsigned jobs = 1;
    std::size_t m = 22, p = 10, rounds = 50, side = 227;
    double frame_ms = 25.0, hop_ms = 10.0;
    Common common;
    SynthOptions synth;

    auto* extract = app.add_subcommand("extract", "Manifest of WAV files to a dataset CSV");
    extract->add_option("--manifest", manifest, "CSV with path,label rows")->required()->check(CLI::ExistingFile);
    extract->add_option("--out", out, "Dataset CSV to write")->required();
    extract->add_option("--config", config, "Extraction config (key=value)");
    extract->add_option("--jobs", jobs, "Files processed in parallel")->capture_default_str();

    auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic labelled corpus");
    synth_cmd->add_option("--out", out, "Output directory")->required();
    synth_cmd->add_option("--n-per-class", synth.n_per_class)->capture_default_str();
    synth_cmd->add_option("--seed", synth.seed)->capture_default_str();
    synth_cmd->add_option("--duration", synth.duration_s, "Seconds per utterance")->capture_default_str();
    synth_cmd->add_option("--sample-rate", synth.sample_rate)->capture_default_str();
    synth_cmd->add_option("--corpus", synth.corpus_id)->capture_default_str();
    synth_cmd->add_option("--jobs", synth.jobs)->capture_default_str();

    auto* rank = app.add_subcommand("rank", "Rank features by single-feature accuracy or a filter score");
    rank->add_option("--dataset", dataset)->required()->check(CLI::ExistingFile);
    auto* rank_clf = rank->add_option("--classifier", classifier, "knn, msvm, mlp, adaboost or pca_knn");
    auto* rank_method = rank->add_option("--method", method, "GR, IG, SU or RF");
    rank_clf->excludes(rank_method);
    rank->add_option("--out", out, "Ranking CSV (default stdout)");
    rank->add_option("--json", json_out, "Also write the ranking as JSON");
    add_train_flags(rank, common, true);

    auto* select = app.add_subcommand("select", "Combine rankings into a feature set");
    select->add_option("--strategy", strategy)
        ->required()
        ->check(CLI::IsMember({"lang-indep", "clf-indep", "full", "special", "common"}));
    select->add_option("--inputs", inputs, "Ranking CSVs or feature_label lists")->required()->check(CLI::ExistingFile);
    select->add_option("--m", m, "Top-m cut for intersections")->capture_default_str();
    select->add_option("--p", p, "Top-p cut for special features")->capture_default_str();
    select->add_option("--out", out, "FeatureSet JSON (default stdout)");

    auto* evaluate = app.add_subcommand("evaluate", "Cross-validate a classifier on a feature subset");
    evaluate->add_option("--dataset", dataset)->required()->check(CLI::ExistingFile);
    evaluate->add_option("--subset", subset, "all, x1,x2,... or a selection JSON")->capture_default_str();
    evaluate->add_option("--classifier", classifier)->required();
    evaluate->add_option("--out", out, "Report JSON (default stdout)");
    evaluate->add_option("--confusion", confusion, "Confusion matrix CSV");
    add_train_flags(evaluate, common, true);

    auto* emo = app.add_subcommand("emotions", "One-vs-rest AdaBoost report per emotion");
    emo->add_option("--dataset", dataset)->required()->check(CLI::ExistingFile);
    emo->add_option("--emotion", emotions, "Emotions to analyse (default all classes)");
    emo->add_option("--rounds", rounds)->capture_default_str();
    emo->add_option("--out", out, "Report JSON (default stdout)");

    auto* spec = app.add_subcommand("spectrogram", "Render a WAV file as a PGM spectrogram image");
    spec->add_option("--wav", wav)->required()->check(CLI::ExistingFile);
    spec->add_option("--out", out, "PGM file")->required();
    spec->add_option("--side", side)->capture_default_str();
    spec->add_option("--frame-ms", frame_ms)->capture_default_str();
    spec->add_option("--hop-ms", hop_ms)->capture_default_str();

    auto* train_cmd = app.add_subcommand("train", "Fit a classifier and save it as JSON");
    train_cmd->add_option("--dataset", dataset)->required()->check(CLI::ExistingFile);
    train_cmd->add_option("--subset", subset)->capture_default_str();
    train_cmd->add_option("--classifier", classifier)->required();
    train_cmd->add_option("--out", out, "Model JSON (default stdout)");
    add_train_flags(train_cmd, common, false);

    auto* predict_cmd = app.add_subcommand("predict", "Label a dataset with a saved model");
    predict_cmd->add_option("--model", model)->required()->check(CLI::ExistingFile);
    predict_cmd->add_option("--dataset", dataset)->required()->check(CLI::ExistingFile);
    predict_cmd->add_option("--out", out, "Predictions CSV (default stdout)");

    try {
        app.parse(argc, argv);
        if (rank->parsed() && classifier.empty() == method.empty())
            throw CLI::ValidationError("rank", "exactly one of --classifier or --method is required");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (extract->parsed()) return run_extract(manifest, out, config, jobs);
        if (synth_cmd->parsed()) {
            const auto mf = synth_corpus(out, default_synth_classes(), synth);
            std::cout << dump({{"files", mf.entries.size()}, {"manifest", (fs::path(out) / "manifest.csv").string()}});
            return 0;
        }
        if (rank->parsed()) return run_rank(dataset, classifier, method, common, out, json_out);
        if (select->parsed()) return run_select(strategy, inputs, m, p, out);
        if (evaluate->parsed()) return run_evaluate(dataset, subset, classifier, common, out, confusion);
        if (emo->parsed()) return run_emotions(dataset, emotions, rounds, out);
        if (spec->parsed()) {
            export_image(spectrogram(read_wav(wav), frame_ms, hop_ms), out, side);
            return 0;
        }
        if (train_cmd->parsed()) return run_train(dataset, subset, classifier, common, out);
        if (predict_cmd->parsed()) return run_predict(model, dataset, out);
    } catch (const Error& e) {
        std::cerr << json{{"error", command}, {"code", to_string(e.code())}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", command}, {"code", "parse_error"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", command}, {"code", "io_error"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
