#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groverian/state.hpp"

namespace groverian {

enum class Method { closed_form, numeric, grid };

const char* method_name(Method m);

struct MeasureResult {
    double p_max = 0.0;            // clamped to [0,1]
    double g = 0.0;                // sqrt(1 - p_max)
    Method method = Method::closed_form;
    std::optional<ProductState> maximizer; // numeric/grid only
};

// Signs eps_k in {+1,-1} with eps_1 = +1. The pattern index doubles as the
// flip mask: bit b of the index flips eps_{n-b}, so qubit k maps to bit n-k
// of an amplitude index and the mask can be ANDed against it directly.
struct SignPattern {
    int n;
    std::uint64_t index;
    std::vector<int> epsilons; // epsilons[k-1] is eps_k

    static SignPattern from_index(int n, std::uint64_t index);
};

// Signed amplitude sums of one pattern: cos_sum over even Hamming weight,
// sin_sum over odd, with sign (-1)^floor(w/2) * prod_{k: i_k=1} eps_k.
struct CoefficientGroups {
    SignPattern pattern;
    double cos_sum = 0.0;
    double sin_sum = 0.0;
};

// +1/-1 sign of amplitude i inside pattern `mask`.
int group_sign(std::uint64_t i, std::uint64_t mask);

CoefficientGroups coefficient_groups(const StateVector& s, std::uint64_t pattern_index);

// (cos_sum, sin_sum) for every pattern index, computed with two
// Walsh-Hadamard transforms in O(n 2^n).
std::vector<std::array<double, 2>> sign_group_sums(const StateVector& s);

// The closed-form maximum success probability:
//   P = (1/4^(n-1)) * (sum_j sqrt(cos_sum_j^2 + sin_sum_j^2))^2.
// Exact only when the combined-angle maxima are simultaneously reachable;
// otherwise an upper bound on the true maximal product-state overlap.
// Real amplitudes required.
MeasureResult closed_form_pmax(const StateVector& s);

// Canonical textual rendering of all 2^(n-1) sign groups, one radical per
// line, terms in ascending bitstring order. Supported for 1 <= n <= 6.
std::string render_groups(int n);

namespace reference {
// Straightforward per-pattern accumulation, O(4^n); kept as the serial
// oracle for the transform-based path.
double closed_form_pmax(const StateVector& s);
} // namespace reference

} // namespace groverian
