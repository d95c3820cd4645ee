#pragma once

// Umbrella header: numerical geometric involutive bases and real-radical
// approximation for polynomial systems.

#include "gibs/basis.hpp"
#include "gibs/coeff.hpp"
#include "gibs/errors.hpp"
#include "gibs/involutive.hpp"
#include "gibs/io.hpp"
#include "gibs/moment.hpp"
#include "gibs/monomial.hpp"
#include "gibs/polynomial.hpp"
#include "gibs/realradical.hpp"
#include "gibs/rng.hpp"
#include "gibs/sdp.hpp"
#include "gibs/subspace.hpp"
#include "gibs/table.hpp"

namespace gibs {
inline constexpr const char* version = "1.0.0";
}
