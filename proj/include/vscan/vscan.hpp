#pragma once

#include "vscan/cache.hpp"
#include "vscan/clustering.hpp"
#include "vscan/color.hpp"
#include "vscan/color_features.hpp"
#include "vscan/errors.hpp"
#include "vscan/evaluator.hpp"
#include "vscan/feature_db.hpp"
#include "vscan/frame.hpp"
#include "vscan/image.hpp"
#include "vscan/image_io.hpp"
#include "vscan/ingest.hpp"
#include "vscan/rational.hpp"
#include "vscan/similarity.hpp"
#include "vscan/summarizer.hpp"
#include "vscan/texture_features.hpp"
#include "vscan/wavelet.hpp"
