#include "groverian/closed_form.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "groverian/errors.hpp"
#include "groverian/parallel.hpp"

namespace groverian {

const char* method_name(Method m)
{
    switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::numeric: return "numeric";
    case Method::grid: return "grid";
    }
    return "unknown";
}

int group_sign(std::uint64_t i, std::uint64_t mask)
{
    int w = std::popcount(i);
    int sign = ((w >> 1) & 1) ? -1 : 1;               // (-1)^floor(w/2)
    if (std::popcount(i & mask) & 1)                  // prod of flipped eps over set bits
        sign = -sign;
    return sign;
}

SignPattern SignPattern::from_index(int n, std::uint64_t index)
{
    if (n < 1)
        throw std::domain_error("pattern: n must be >= 1");
    if (index >= (std::uint64_t{1} << (n - 1)))
        throw std::domain_error("pattern index out of range");
    SignPattern p{n, index, std::vector<int>(static_cast<std::size_t>(n), 1)};
    for (int k = 2; k <= n; ++k)
        if ((index >> (n - k)) & 1)
            p.epsilons[k - 1] = -1;
    return p;
}

CoefficientGroups coefficient_groups(const StateVector& s, std::uint64_t pattern_index)
{
    auto amps = s.real_amplitudes();
    SignPattern pat = SignPattern::from_index(s.qubits(), pattern_index);
    CoefficientGroups g{pat, 0.0, 0.0};
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        double term = group_sign(i, pattern_index) * amps[i];
        if (std::popcount(i) & 1)
            g.sin_sum += term;
        else
            g.cos_sum += term;
    }
    return g;
}

namespace {

// In-place unnormalized Walsh-Hadamard transform:
// F(m) = sum_i (-1)^popcount(m & i) f(i).
void walsh_hadamard(std::vector<double>& f)
{
    std::size_t n = f.size();
    for (std::size_t len = 1; len < n; len <<= 1) {
        std::int64_t pairs = static_cast<std::int64_t>(n >> 1);
        if (n >= (1u << 14)) {
            parallel_for(pairs, [&](std::int64_t p) {
                std::size_t blk = static_cast<std::size_t>(p) / len;
                std::size_t off = static_cast<std::size_t>(p) % len;
                std::size_t i = blk * 2 * len + off;
                double a = f[i], b = f[i + len];
                f[i] = a + b;
                f[i + len] = a - b;
            });
        } else {
            for (std::size_t i = 0; i < n; i += 2 * len)
                for (std::size_t j = i; j < i + len; ++j) {
                    double a = f[j], b = f[j + len];
                    f[j] = a + b;
                    f[j + len] = a - b;
                }
        }
    }
}

double radical_sum_to_pmax(double total, int n)
{
    double scale = static_cast<double>(std::uint64_t{1} << (n - 1));
    double p = (total / scale) * (total / scale);
    if (p < 0.0)
        p = 0.0;
    if (p > 1.0)
        p = 1.0; // the sum never exceeds 2^(n-1) for normalized input; rounding only
    return p;
}

} // namespace

std::vector<std::array<double, 2>> sign_group_sums(const StateVector& s)
{
    auto amps = s.real_amplitudes();
    int n = s.qubits();
    std::uint64_t dim = s.dimension();
    std::vector<double> even(dim, 0.0), odd(dim, 0.0);
    for (std::uint64_t i = 0; i < dim; ++i) {
        int w = std::popcount(i);
        double g = ((w >> 1) & 1) ? -amps[i] : amps[i];
        (w & 1 ? odd : even)[i] = g;
    }
    walsh_hadamard(even);
    walsh_hadamard(odd);
    std::vector<std::array<double, 2>> out(dim >> 1);
    for (std::uint64_t m = 0; m < (dim >> 1); ++m)
        out[m] = {even[m], odd[m]};
    return out;
}

MeasureResult closed_form_pmax(const StateVector& s)
{
    auto sums = sign_group_sums(s);
    double total = 0.0;
    for (const auto& ab : sums)
        total += std::sqrt(ab[0] * ab[0] + ab[1] * ab[1]);
    double p = radical_sum_to_pmax(total, s.qubits());
    return MeasureResult{p, std::sqrt(1.0 - p), Method::closed_form, std::nullopt};
}

std::string render_groups(int n)
{
    if (n < 1 || n > 6)
        throw config_error("render_groups supports 1 <= n <= 6, got " + std::to_string(n));
    std::string out;
    std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < (dim >> 1); ++mask) {
        std::string cos_terms, sin_terms;
        for (std::uint64_t i = 0; i < dim; ++i) {
            std::string term;
            term += group_sign(i, mask) > 0 ? '+' : '-';
            term += 'a';
            for (int b = n - 1; b >= 0; --b)
                term += ((i >> b) & 1) ? '1' : '0';
            std::string& dst = (std::popcount(i) & 1) ? sin_terms : cos_terms;
            if (!dst.empty())
                dst += ' ';
            dst += term;
        }
        out += "sqrt[ (" + cos_terms + ")^2 + (" + sin_terms + ")^2 ]\n";
    }
    return out;
}

namespace reference {

double closed_form_pmax(const StateVector& s)
{
    int n = s.qubits();
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        CoefficientGroups g = coefficient_groups(s, mask);
        total += std::hypot(g.cos_sum, g.sin_sum);
    }
    return radical_sum_to_pmax(total, n);
}

} // namespace reference

} // namespace groverian
