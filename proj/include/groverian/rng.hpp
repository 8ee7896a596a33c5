#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace groverian {

// mt19937_64 with hand-rolled output maps. std::*_distribution is
// implementation-defined, so sampling through it would not reproduce
// across standard libraries; these maps keep seeded runs portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in (0, 1]
    double uniform()
    {
        return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // standard normal, Box-Muller
    double gaussian()
    {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::acos(-1.0) * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace groverian
