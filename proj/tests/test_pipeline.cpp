#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>

#include <vocalfeat/pipeline/build.hpp>
#include <vocalfeat/pipeline/manifest.hpp>
#include <vocalfeat/pipeline/synth.hpp>
#include <vocalfeat/selection/ranking.hpp>

using namespace vocalfeat;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("vocalfeat_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

SynthOptions small_options(std::size_t per_class) {
    SynthOptions opt;
    opt.n_per_class = per_class;
    opt.duration_s = 0.4;
    opt.seed = 7;
    return opt;
}

} // namespace

TEST(Manifest, CsvRoundTrip) {
    CorpusManifest m;
    m.corpus_id = "demo";
    m.entries = {{"a.wav", "anger"}, {"dir/b, c.wav", "neutral"}};
    const auto back = manifest_from_csv(manifest_to_csv(m));
    EXPECT_EQ(back.corpus_id, "demo");
    EXPECT_EQ(back.entries, m.entries);
}

TEST(Manifest, Rejections) {
    EXPECT_THROW(manifest_from_csv("file,label\na,b\n"), Error);
    EXPECT_THROW(manifest_from_csv("path,label\na.wav,\n"), Error);
    EXPECT_THROW(manifest_from_csv("path,label\na.wav,x\na.wav,y\n"), Error);
    EXPECT_THROW(read_manifest("/nonexistent/manifest.csv"), Error);
}

TEST(Manifest, ReadResolvesAgainstItsDirectory) {
    const auto dir = scratch("manifest");
    {
        std::ofstream out(dir / "corpus_a.csv");
        out << "path,label\nx.wav,anger\n";
    }
    const auto m = read_manifest(dir / "corpus_a.csv");
    EXPECT_EQ(m.corpus_id, "corpus_a");
    EXPECT_EQ(m.resolve(m.entries[0]), dir / "x.wav");
    fs::remove_all(dir);
}

TEST(Synth, DeterministicFilesAndCounts) {
    const auto a = scratch("synth_a"), b = scratch("synth_b");
    const auto opt = small_options(3);
    const auto ma = synth_corpus(a, default_synth_classes(), opt);
    auto opt_jobs = opt;
    opt_jobs.jobs = 3;
    const auto mb = synth_corpus(b, default_synth_classes(), opt_jobs);
    ASSERT_EQ(ma.entries.size(), 15u);
    EXPECT_EQ(ma.entries, mb.entries);
    for (const auto& e : ma.entries) EXPECT_EQ(read_file_bytes(a / e.path), read_file_bytes(b / e.path)) << e.path;
    EXPECT_EQ(read_file_bytes(a / "manifest.csv"), read_file_bytes(b / "manifest.csv"));
    std::map<std::string, int> per_label;
    for (const auto& e : ma.entries) ++per_label[e.label];
    for (const auto& name : canonical_emotions()) EXPECT_EQ(per_label[name], 3);
    const auto pcm = decode_wav_pcm16(read_file_bytes(a / ma.entries[0].path));
    EXPECT_EQ(pcm.sample_rate, 16000);
    EXPECT_EQ(pcm.samples.size(), 6400u);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(Synth, DifferentSeedsDiffer) {
    const auto& c = default_synth_classes().front();
    EXPECT_NE(synth_utterance(c, 0.2, 16000, 1).samples(), synth_utterance(c, 0.2, 16000, 2).samples());
    EXPECT_EQ(synth_utterance(c, 0.2, 16000, 1).samples(), synth_utterance(c, 0.2, 16000, 1).samples());
}

TEST(Build, SkipsUnreadableFilesAndKeepsOrder) {
    const auto dir = scratch("build");
    auto m = synth_corpus(dir, default_synth_classes(), small_options(2));
    m.entries.insert(m.entries.begin() + 3, {"missing.wav", "anger"});
    {
        std::ofstream out(dir / "junk.wav", std::ios::binary);
        out << "not a wav";
    }
    m.entries.push_back({"junk.wav", "fear"});
    const auto r = build_dataset(m, {}, 2);
    ASSERT_TRUE(r.dataset.has_value());
    EXPECT_EQ(r.dataset->size(), 10u);
    EXPECT_EQ(r.dataset->dims(), 84u);
    ASSERT_EQ(r.failures.size(), 2u);
    EXPECT_EQ(r.failures[0].path, "missing.wav");
    EXPECT_EQ(r.failures[0].code, "file_not_found");
    EXPECT_EQ(r.failures[1].code, "malformed_file");
    EXPECT_EQ(r.dataset->sample_ids[3], m.entries[4].path);

    const auto serial = build_dataset(m, {}, 1);
    EXPECT_EQ(dataset_to_csv(*serial.dataset), dataset_to_csv(*r.dataset));
    fs::remove_all(dir);
}

TEST(Build, DatasetCsvRoundTripIsLossless) {
    const auto dir = scratch("roundtrip");
    const auto m = synth_corpus(dir, default_synth_classes(), small_options(1));
    const auto ds = *build_dataset(m).dataset;
    write_dataset(dir / "features.csv", ds);
    const auto back = read_dataset(dir / "features.csv");
    for (std::size_t i = 0; i < ds.features.data().size(); ++i)
        EXPECT_NEAR(back.features.data()[i], ds.features.data()[i], 1e-8 * std::max(1.0, std::abs(ds.features.data()[i])));
    EXPECT_EQ(back.labels, ds.labels);
    EXPECT_EQ(back.class_names, ds.class_names);
    EXPECT_EQ(back.sample_ids, ds.sample_ids);
    EXPECT_EQ(back.corpus_id, ds.corpus_id);
    EXPECT_EQ(dataset_to_csv(back), read_text_file(dir / "features.csv"));
    fs::remove_all(dir);
}

TEST(Build, PitchSeparatesSynthClasses) {
    const auto dir = scratch("pitch");
    const auto m = synth_corpus(dir, default_synth_classes(), small_options(3));
    const auto ds = *build_dataset(m).dataset;
    const auto pitch = select_features(ds, {24}).features.column(0);
    std::map<std::string, std::pair<double, double>> range;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto& name = ds.class_names[static_cast<std::size_t>(ds.labels[i])];
        auto [it, fresh] = range.try_emplace(name, pitch[i], pitch[i]);
        if (!fresh) {
            it->second.first = std::min(it->second.first, pitch[i]);
            it->second.second = std::max(it->second.second, pitch[i]);
        }
    }
    for (const auto& c : default_synth_classes()) {
        EXPECT_GE(range[c.name].first, c.f0_lo * 0.97) << c.name;
        EXPECT_LE(range[c.name].second, c.f0_hi * 1.03) << c.name;
    }
    fs::remove_all(dir);
}
