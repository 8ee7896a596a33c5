#include <doctest.h>

#include <cmath>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "groverian/closed_form.hpp"
#include "groverian/optimize.hpp"
#include "groverian/rng.hpp"

using namespace groverian;

namespace {

StateVector random_real_state(Rng& rng, int n)
{
    std::vector<complex> amps(std::size_t{1} << n);
    double nrm = 0.0;
    for (auto& a : amps) {
        a = complex{rng.gaussian(), 0.0};
        nrm += std::norm(a);
    }
    nrm = std::sqrt(nrm);
    for (auto& a : amps)
        a /= nrm;
    return StateVector(n, std::move(amps));
}

} // namespace

TEST_CASE("transform closed form matches the reference at larger n")
{
    Rng rng(31);
    for (int n : {7, 9, 11}) {
        StateVector s = random_real_state(rng, n);
        double fast = closed_form_pmax(s).p_max;
        double slow = reference::closed_form_pmax(s);
        CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
    }
}

TEST_CASE("results do not depend on the thread count")
{
#ifdef _OPENMP
    int saved = omp_get_max_threads();
#endif
    Rng rng(17);
    StateVector s = random_real_state(rng, 3);
    StateVector s5 = random_real_state(rng, 5);

    auto run_all = [&]() {
        NumericConfig cfg;
        cfg.starts = 24;
        MeasureResult grid = grid_pmax(s, 61);
        MeasureResult num = numeric_pmax(s5, cfg);
        return std::make_tuple(grid.p_max, grid.maximizer->thetas[0], num.p_max,
                               num.maximizer->thetas[0]);
    };

#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    auto serial = run_all();
#ifdef _OPENMP
    omp_set_num_threads(saved);
#endif
    auto parallel = run_all();

    CHECK(std::get<0>(serial) == std::get<0>(parallel));
    CHECK(std::get<1>(serial) == std::get<1>(parallel));
    CHECK(std::get<2>(serial) == std::get<2>(parallel));
    CHECK(std::get<3>(serial) == std::get<3>(parallel));
}

TEST_CASE("walsh-hadamard closed form handles every supported size")
{
    Rng rng(23);
    for (int n = 1; n <= 12; ++n) {
        StateVector s = random_real_state(rng, n);
        double p = closed_form_pmax(s).p_max;
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
    }
}
