#include "groverian/grover.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace groverian {

namespace {

void check_marked(const StateVector& s, std::uint64_t marked)
{
    if (marked >= s.dimension())
        throw std::domain_error("marked index " + std::to_string(marked) +
                                " out of range for n = " + std::to_string(s.qubits()));
}

} // namespace

IterationAngle iteration_angle(int n, int k)
{
    if (n < 1)
        throw std::domain_error("iteration_angle: n must be >= 1");
    double theta0 = std::asin(1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << n)));
    return IterationAngle{theta0, (2.0 * k + 1.0) * theta0};
}

StateVector apply_oracle(const StateVector& s, std::uint64_t marked)
{
    check_marked(s, marked);
    std::vector<complex> amps(s.amplitudes());
    amps[marked] = -amps[marked];
    return StateVector(s.qubits(), std::move(amps));
}

StateVector apply_diffusion(const StateVector& s)
{
    const auto& a = s.amplitudes();
    complex sum{};
    for (const auto& v : a)
        sum += v;
    // <eta|s> = sum / sqrt(N); subtract 2 <eta|s> |eta> = (2 sum / N) each
    complex shift = 2.0 * sum / static_cast<double>(s.dimension());
    std::vector<complex> amps(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        amps[i] = a[i] - shift;
    return StateVector(s.qubits(), std::move(amps));
}

StateVector evolve(StateVector s, std::uint64_t marked, int iterations)
{
    if (iterations < 0)
        throw std::domain_error("iterations must be >= 0");
    check_marked(s, marked);
    for (int j = 0; j < iterations; ++j)
        s = apply_diffusion(apply_oracle(s, marked));
    return s;
}

EvolutionTrace run_trace(int n, std::uint64_t marked, int iterations)
{
    if (iterations < 0)
        throw std::domain_error("iterations must be >= 0");
    EvolutionTrace trace{n, marked, {}};
    StateVector s = StateVector::uniform(n);
    check_marked(s, marked);
    trace.steps.push_back({"initial", s});
    for (int j = 1; j <= iterations; ++j) {
        s = apply_oracle(s, marked);
        trace.steps.push_back({"after P_w (iter " + std::to_string(j) + ")", s});
        s = apply_diffusion(s);
        trace.steps.push_back({"after P_s (iter " + std::to_string(j) + ")", s});
    }
    return trace;
}

StateVector analytic_state(int n, std::uint64_t marked, int k)
{
    if (k < 0)
        throw std::domain_error("iteration count must be >= 0");
    std::uint64_t dim = std::uint64_t{1} << n;
    if (marked >= dim)
        throw std::domain_error("marked index out of range");
    double th = iteration_angle(n, k).theta_k;
    double rest = std::cos(th) / std::sqrt(static_cast<double>(dim - 1));
    std::vector<complex> amps(dim, complex{rest, 0.0});
    amps[marked] = std::sin(th);
    return StateVector(n, std::move(amps));
}

BlochVector analytic_bloch(int n, int k)
{
    double th = iteration_angle(n, k).theta_k;
    double N = static_cast<double>(std::uint64_t{1} << n);
    double c2 = std::cos(th) * std::cos(th);
    BlochVector b;
    b.x = (N - 2.0) / (N - 1.0) * c2 + std::sin(2.0 * th) / std::sqrt(N - 1.0);
    b.y = 0.0;
    b.z = c2 / (N - 1.0) - std::sin(th) * std::sin(th);
    return b;
}

double success_probability(const StateVector& s, std::uint64_t marked)
{
    check_marked(s, marked);
    return std::norm(s.amplitude(marked));
}

int optimal_iterations(int n)
{
    double theta0 = iteration_angle(n, 0).theta0;
    double pi = std::acos(-1.0);
    return static_cast<int>(std::lround(pi / (4.0 * theta0) - 0.5));
}

} // namespace groverian
