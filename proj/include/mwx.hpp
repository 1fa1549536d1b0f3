#pragma once

#include "mwx/circuit.hpp"
#include "mwx/constants.hpp"
#include "mwx/errors.hpp"
#include "mwx/io.hpp"
#include "mwx/mode.hpp"
#include "mwx/planewave.hpp"
#include "mwx/quantum.hpp"
#include "mwx/run.hpp"
#include "mwx/solver.hpp"
