#pragma once

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "../audio/wav.hpp"
#include "../data/dataset.hpp"
#include "../features/extract.hpp"
#include "manifest.hpp"

namespace vocalfeat {

struct BuildFailure {
    std::string path;
    std::string code;
    std::string message;
};

struct BuildResult {
    /// Empty when every file failed.
    std::optional<LabeledDataset> dataset;
    std::vector<BuildFailure> failures;
};

/// One feature vector per readable manifest entry, in manifest order.
inline BuildResult build_dataset(const CorpusManifest& manifest, const ExtractionConfig& cfg = {}, unsigned jobs = 1) {
    manifest.validate();
    cfg.validate();
    const std::size_t n = manifest.entries.size();
    std::vector<std::optional<FeatureVector>> rows(n);
    std::vector<std::optional<BuildFailure>> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            const auto& e = manifest.entries[i];
            try {
                auto fv = extract_feature_vector(read_wav(manifest.resolve(e)), cfg);
                fv.label = e.label;
                fv.corpus = manifest.corpus_id;
                rows[i] = std::move(fv);
            } catch (const Error& err) {
                errors[i] = BuildFailure{e.path, to_string(err.code()), err.what()};
            } catch (const std::exception& err) {
                errors[i] = BuildFailure{e.path, "io_error", err.what()};
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    BuildResult result;
    std::vector<FeatureVector> ok;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i]) {
            ok.push_back(*rows[i]);
            ids.push_back(manifest.entries[i].path);
        } else if (errors[i]) {
            result.failures.push_back(*errors[i]);
        }
    }
    if (!ok.empty()) result.dataset = make_dataset(ok, manifest.corpus_id, ids);
    return result;
}

} // namespace vocalfeat
