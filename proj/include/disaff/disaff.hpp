#pragma once

// Umbrella header.

#include "disaff/analysis/correlation.hpp"
#include "disaff/analysis/news_linking.hpp"
#include "disaff/analysis/peaks.hpp"
#include "disaff/analysis/time_series.hpp"
#include "disaff/chain/chain.hpp"
#include "disaff/chain/io.hpp"
#include "disaff/chain/stage_features.hpp"
#include "disaff/corpus/io.hpp"
#include "disaff/corpus/krippendorff.hpp"
#include "disaff/corpus/labels.hpp"
#include "disaff/corpus/records.hpp"
#include "disaff/error.hpp"
#include "disaff/features/italian_stemmer.hpp"
#include "disaff/features/normalizer.hpp"
#include "disaff/features/sparse_vector.hpp"
#include "disaff/features/tokenizer.hpp"
#include "disaff/features/vectorize.hpp"
#include "disaff/features/vocabulary.hpp"
#include "disaff/learners/linear_model.hpp"
#include "disaff/learners/model_io.hpp"
#include "disaff/learners/train.hpp"
#include "disaff/learners/updates.hpp"
#include "disaff/version.hpp"
