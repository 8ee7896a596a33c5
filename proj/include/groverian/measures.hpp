#pragma once

#include "groverian/state.hpp"

namespace groverian {

// Base-2 von Neumann entropy -sum lambda log2 lambda with 0 log 0 = 0.
// Eigenvalues below 1e-15 are treated as exact zeros (they are numerical
// noise at the scale of a trace-one 2x2 matrix).
double entropy_of_rdm(const ReducedDensityMatrix& r);

// entropy_of_rdm(reduce_qubit(s, qubit)): one-vs-rest bipartite entropy.
double entropy_measure(const StateVector& s, int qubit);

// The three quartic amplitude polynomials of the residual-tangle formula.
struct TangleTerms {
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
};

TangleTerms tangle_terms(const StateVector& s);

// Residual three-way tangle 4|d1 - 2 d2 + 4 d3|; n = 3, real amplitudes.
double three_tangle(const StateVector& s);

} // namespace groverian
