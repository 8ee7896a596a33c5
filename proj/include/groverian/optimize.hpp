#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "groverian/closed_form.hpp"
#include "groverian/state.hpp"

namespace groverian {

struct NumericConfig {
    int starts = 128;
    double tol = 1e-12;
    int max_iters = 500;
    std::uint64_t seed = 42;
};

using LocalVector = std::array<complex, 2>;

// One alternating-contraction ascent (rank-1 tensor approximation): each
// step replaces qubit k's local vector by the normalized contraction of the
// state against all other qubits' vectors. The overlap magnitude after each
// sweep is recorded; it is non-decreasing.
struct AscentRecord {
    double overlap = 0.0; // |<e|Psi>| at the final sweep
    std::vector<double> sweep_overlaps;
    std::vector<LocalVector> vectors;
};

AscentRecord als_ascend(const StateVector& s, std::vector<LocalVector> init,
                        double tol, int max_iters);

// Deterministic Gaussian start vectors for `starts` ascents (one serial RNG
// stream, so the result is independent of how the starts are scheduled).
// Real starts keep the whole ascent inside real product states.
std::vector<std::vector<LocalVector>> als_starts(int n, int starts, std::uint64_t seed,
                                                 bool real_vectors);

// Multi-start ascent; best |overlap|^2 across starts, ties broken by lowest
// start index. For real input states the search runs over real product
// states (the phase maximization is discrete there and the closed form
// bounds exactly this problem; complex product states can overlap a real
// state strictly better, which is a different quantity). Complex input
// states get complex local vectors.
MeasureResult numeric_pmax(const StateVector& s, const NumericConfig& cfg = {});

// Exhaustive real-angle scan on a uniform theta grid over [-pi/2, pi/2]^n
// followed by per-coordinate golden-section refinement. n <= 3. The result
// is a certified lower bound on the true maximum.
MeasureResult grid_pmax(const StateVector& s, int resolution = 181);

// Builds product_to_state(p), runs `iterations` (P_w, P_s) pairs with the
// given marked state and returns the success probability.
double operational_success(int n, std::uint64_t marked, int iterations,
                           const ProductState& p);

namespace reference {
// Serial multi-start loop; must agree exactly with the parallel merge.
MeasureResult numeric_pmax(const StateVector& s, const NumericConfig& cfg = {});
// Plain nested-loop grid scan without folding or refinement; best grid
// value only.
double grid_scan(const StateVector& s, int resolution);
} // namespace reference

} // namespace groverian
