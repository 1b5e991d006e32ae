#pragma once

// Umbrella header.

#include "nsgp/error.hpp"
#include "nsgp/semigroup.hpp"
#include "nsgp/notation.hpp"
#include "nsgp/ideal.hpp"
#include "nsgp/quotient.hpp"
#include "nsgp/duplication.hpp"
#include "nsgp/formulas.hpp"
#include "nsgp/oracles.hpp"
#include "nsgp/verify.hpp"
