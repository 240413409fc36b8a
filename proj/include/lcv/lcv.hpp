#pragma once

// Umbrella header for the whole library.

#include "lcv/core.hpp"
#include "lcv/data_io.hpp"
#include "lcv/error.hpp"
#include "lcv/fdr.hpp"
#include "lcv/jackknife.hpp"
#include "lcv/ldsc.hpp"
#include "lcv/mr.hpp"
#include "lcv/pipeline.hpp"
#include "lcv/presets.hpp"
#include "lcv/rng.hpp"
#include "lcv/serialization.hpp"
#include "lcv/simulator.hpp"
#include "lcv/stats.hpp"
