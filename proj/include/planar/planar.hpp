#pragma once

#include "planar/algebra.hpp"
#include "planar/cells.hpp"
#include "planar/diagram.hpp"
#include "planar/error.hpp"
#include "planar/json_io.hpp"
#include "planar/random.hpp"
#include "planar/scalar.hpp"
#include "planar/tangle.hpp"
#include "planar/trace.hpp"
