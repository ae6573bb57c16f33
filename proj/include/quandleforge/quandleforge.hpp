#pragma once

// Umbrella header.

#include "quandleforge/abelian.hpp"
#include "quandleforge/cocycle.hpp"
#include "quandleforge/cocycle_space.hpp"
#include "quandleforge/diagram.hpp"
#include "quandleforge/errors.hpp"
#include "quandleforge/io.hpp"
#include "quandleforge/movie.hpp"
#include "quandleforge/quandle.hpp"
