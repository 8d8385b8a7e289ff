#pragma once

#include "frobkit/basis_change.hpp"
#include "frobkit/cartier.hpp"
#include "frobkit/error.hpp"
#include "frobkit/field.hpp"
#include "frobkit/fractal.hpp"
#include "frobkit/frobenius.hpp"
#include "frobkit/ideal.hpp"
#include "frobkit/polynomial.hpp"
#include "frobkit/rational.hpp"
#include "frobkit/ring.hpp"
#include "frobkit/thresholds.hpp"
