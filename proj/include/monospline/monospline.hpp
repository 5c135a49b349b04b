#pragma once

#include "monospline/builders.hpp"
#include "monospline/error.hpp"
#include "monospline/experiments.hpp"
#include "monospline/grid.hpp"
#include "monospline/hermite.hpp"
#include "monospline/io.hpp"
#include "monospline/limiters.hpp"
#include "monospline/monotonicity.hpp"
#include "monospline/spline_system.hpp"
