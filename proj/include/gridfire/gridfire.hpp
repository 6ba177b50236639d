#pragma once

// Umbrella header for the gridfire library.

#include "gridfire/coverage.hpp"
#include "gridfire/detection.hpp"
#include "gridfire/grid.hpp"
#include "gridfire/oracle.hpp"
#include "gridfire/planner.hpp"
#include "gridfire/render.hpp"
#include "gridfire/rng.hpp"
#include "gridfire/run.hpp"
#include "gridfire/scenario.hpp"
