#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groverian/state.hpp"

namespace groverian {

// Labeled half-step sequence of a search run: the initial uniform state
// followed by alternating P_w / P_s applications.
struct EvolutionTrace {
    struct Step {
        std::string label;
        StateVector state;
    };

    int qubits;
    std::uint64_t marked;
    std::vector<Step> steps;
};

// theta_0 with sin theta_0 = 1/sqrt(2^n), and theta_k = (2k+1) theta_0.
struct IterationAngle {
    double theta0;
    double theta_k;
};

IterationAngle iteration_angle(int n, int k);

// P_w = 1 - 2|w><w| : negates the marked amplitude.
StateVector apply_oracle(const StateVector& s, std::uint64_t marked);

// P_s = 1 - 2|eta><eta| with |eta> the uniform superposition. This is the
// negative of the conventional diffusion operator; every measure downstream
// is invariant under the global sign.
StateVector apply_diffusion(const StateVector& s);

// Applies `iterations` (P_w, P_s) pairs to an arbitrary start state.
StateVector evolve(StateVector s, std::uint64_t marked, int iterations);

// Trace of 1 + 2*iterations states starting from the uniform superposition.
EvolutionTrace run_trace(int n, std::uint64_t marked, int iterations);

// The closed-form state after k full iterations:
//   cos(theta_k)/sqrt(N-1) * sum_{x != w} |x> + sin(theta_k) |w>.
// Equals run_trace's state after k iterations up to a global sign.
StateVector analytic_state(int n, std::uint64_t marked, int k);

// Closed-form Bloch vector of any single-qubit marginal after k full
// iterations, marked state all-ones.
BlochVector analytic_bloch(int n, int k);

// |a_w|^2
double success_probability(const StateVector& s, std::uint64_t marked);

// round(pi/(4 theta_0) - 1/2)
int optimal_iterations(int n);

} // namespace groverian
