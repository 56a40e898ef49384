// Language-independent feature sets from the bundled ranking fixtures.
// Usage: demo_select_fixture_sets [fixtures_dir]
#include <iostream>

#include <vocalfeat/vocalfeat.hpp>

using namespace vocalfeat;

int main(int argc, char** argv) {
    const std::filesystem::path root = argc > 1 ? argv[1] : "fixtures";
    std::map<std::string, FeatureSet> columns;
    for (const std::string clf : {"knn", "msvm", "nn"}) {
        std::map<std::string, RankingTable> per_dataset;
        for (const std::string d : {"polish", "savee", "serbian"})
            per_dataset[d] = read_ranking(root / "rankings" / (d + "_" + clf + ".csv"), true);
        columns[clf] = language_independent(per_dataset);
        std::cout << clf << ":";
        for (const auto& t : columns[clf].tags()) std::cout << ' ' << t;
        std::cout << '\n';
    }
    std::cout << "all classifiers:";
    for (const auto& t : fully_independent(columns).tags()) std::cout << ' ' << t << " (" << feature_name(label_of(t).index) << ')';
    std::cout << '\n';
}
