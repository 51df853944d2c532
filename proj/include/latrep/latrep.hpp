#pragma once

// Umbrella header for the latrep library.

#include "latrep/dot.hpp"
#include "latrep/errors.hpp"
#include "latrep/filters.hpp"
#include "latrep/json_io.hpp"
#include "latrep/lattice.hpp"
#include "latrep/lazy.hpp"
#include "latrep/plugin.hpp"
#include "latrep/poset.hpp"
#include "latrep/repr.hpp"
#include "latrep/rng.hpp"
#include "latrep/subset.hpp"
#include "latrep/transpose.hpp"
#include "latrep/verify.hpp"
#include "latrep/window.hpp"
