#pragma once

#include "error.hpp"
#include "matrix.hpp"
#include "rng.hpp"

#include "audio/framing.hpp"
#include "audio/signal.hpp"
#include "audio/wav.hpp"
#include "dsp/fft.hpp"

#include "features/catalogue.hpp"
#include "features/config.hpp"
#include "features/extract.hpp"
#include "features/lpc.hpp"
#include "features/mel.hpp"
#include "features/pitch.hpp"
#include "features/stats.hpp"

#include "data/csv.hpp"
#include "data/dataset.hpp"

#include "filters/cfs.hpp"
#include "filters/discretize.hpp"
#include "filters/entropy.hpp"
#include "filters/relieff.hpp"

#include "classifiers/adaboost.hpp"
#include "classifiers/knn.hpp"
#include "classifiers/mlp.hpp"
#include "classifiers/model.hpp"
#include "classifiers/msvm.hpp"
#include "classifiers/pca.hpp"
#include "classifiers/standardize.hpp"

#include "evaluation/cv.hpp"

#include "selection/algebra.hpp"
#include "selection/emotions.hpp"
#include "selection/feature_set.hpp"
#include "selection/rank.hpp"
#include "selection/ranking.hpp"
#include "selection/report.hpp"

#include "spectro/spectrogram.hpp"

#include "pipeline/build.hpp"
#include "pipeline/manifest.hpp"
#include "pipeline/synth.hpp"
