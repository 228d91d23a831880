#pragma once

// Umbrella header for the qndet library.

#include "qndet/constants.hpp"
#include "qndet/eit.hpp"
#include "qndet/fock.hpp"
#include "qndet/homodyne.hpp"
#include "qndet/kerr.hpp"
#include "qndet/math.hpp"
#include "qndet/types.hpp"
