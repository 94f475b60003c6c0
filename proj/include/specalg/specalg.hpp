#pragma once

/// Umbrella header: the whole library in one include.

#include "errors.hpp"          // IWYU pragma: export
#include "half_integer.hpp"    // IWYU pragma: export
#include "jet.hpp"             // IWYU pragma: export
#include "ladder.hpp"          // IWYU pragma: export
#include "model.hpp"           // IWYU pragma: export
#include "oracle.hpp"          // IWYU pragma: export
#include "quadrature.hpp"      // IWYU pragma: export
#include "representation.hpp"  // IWYU pragma: export
#include "wavefunction.hpp"    // IWYU pragma: export
