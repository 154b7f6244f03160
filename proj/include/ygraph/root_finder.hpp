#pragma once

#include <vector>

#include "ygraph/bigfloat.hpp"
#include "ygraph/polynomial.hpp"

namespace ygraph {

struct ApproxRoot {
    BigComplex value;
    int multiplicity = 1;
    /// Radius of a disk around `value` that contains the exact root.
    BigFloat error_radius;
};

/*
 * All complex roots of p with multiplicities.
 *
 * p is first split into square-free factors over Z, so every factor has
 * simple roots and multiplicities are exact. Each factor is solved with the
 * Aberth–Ehrlich iteration: a double-precision pass supplies starting
 * values, then the iteration is repeated at `bits` of working precision.
 * Error radii are the classical inclusion bound deg·|p(z)|/|lc·Π(z - z_j)|
 * with an allowance for rounding in the evaluation of p.
 *
 * Throws Error{NoConvergence} if the iteration stalls above half the
 * working precision.
 */
std::vector<ApproxRoot> polynomial_roots(const IntPoly& p, PrecisionBits bits);

}  // namespace ygraph
