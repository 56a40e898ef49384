// Prints the 84 features of one WAV file, or of a synthetic utterance when no file is given.
// Usage: demo_extract_one_file [file.wav]
#include <cstdio>

#include <vocalfeat/vocalfeat.hpp>

using namespace vocalfeat;

int main(int argc, char** argv) {
    const Signal s = argc > 1 ? read_wav(argv[1]) : synth_utterance(default_synth_classes().front(), 1.0, 16000, 1);
    const auto fv = extract_feature_vector(s);
    for (int i = 1; i <= kNumFeatures; ++i) std::printf("x%-3d %-22s %12.6g\n", i, feature_name(i).c_str(), fv.at(i));
}
