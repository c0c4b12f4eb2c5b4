#pragma once

// Elliptic divisibility sequences over Q, in exact arithmetic: Weierstrass
// group law, division polynomials, denominator/gcd sequences, reduction data,
// and Ward-recurrence verification.

#include "eds/context.hpp"
#include "eds/curve.hpp"
#include "eds/divpoly.hpp"
#include "eds/errors.hpp"
#include "eds/factorize.hpp"
#include "eds/io.hpp"
#include "eds/numeric.hpp"
#include "eds/recurrence.hpp"
#include "eds/reduction.hpp"
#include "eds/sequences.hpp"
