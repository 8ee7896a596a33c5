#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "groverian/closed_form.hpp"
#include "groverian/errors.hpp"
#include "groverian/grover.hpp"
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

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("sign pattern indexing")
{
    // bit 0 of the index flips eps_n, bit n-2 flips eps_2, eps_1 fixed
    SignPattern p = SignPattern::from_index(3, 0);
    CHECK(p.epsilons == std::vector<int>{1, 1, 1});
    CHECK(SignPattern::from_index(3, 1).epsilons == std::vector<int>{1, 1, -1});
    CHECK(SignPattern::from_index(3, 2).epsilons == std::vector<int>{1, -1, 1});
    CHECK(SignPattern::from_index(3, 3).epsilons == std::vector<int>{1, -1, -1});
    CHECK_THROWS_AS(SignPattern::from_index(3, 4), std::domain_error);
}

TEST_CASE("coefficient groups reproduce the printed n=3 brackets")
{
    StateVector u = StateVector::uniform(3);
    double q = 1.0 / (2.0 * std::sqrt(2.0));

    CoefficientGroups g0 = coefficient_groups(u, 0);
    // a000 - a110 - a101 - a011 and a100 + a010 + a001 - a111
    CHECK(g0.cos_sum == doctest::Approx(q * (1 - 1 - 1 - 1)).epsilon(1e-14));
    CHECK(g0.sin_sum == doctest::Approx(q * (1 + 1 + 1 - 1)).epsilon(1e-14));

    CoefficientGroups g1 = coefficient_groups(u, 1);
    // a000 - a110 + a101 + a011 and a100 + a010 - a001 + a111
    CHECK(g1.cos_sum == doctest::Approx(q * 2).epsilon(1e-14));
    CHECK(g1.sin_sum == doctest::Approx(q * 2).epsilon(1e-14));
}

TEST_CASE("coefficient groups, n=5 pattern 0 weight structure")
{
    // +a00000, all ten weight-2 terms negative, all five weight-4 positive;
    // B: weight-1 positive, weight-3 negative, +a11111
    for (std::uint64_t i = 0; i < 32; ++i) {
        int w = __builtin_popcountll(i);
        int sign = group_sign(i, 0);
        if (w == 0 || w == 1 || w == 4 || w == 5)
            CHECK(sign == 1);
        else
            CHECK(sign == -1);
    }
}

TEST_CASE("single qubit closed form is exact")
{
    StateVector s(1, {0.6, 0.8});
    CoefficientGroups g = coefficient_groups(s, 0);
    CHECK(g.cos_sum == doctest::Approx(0.6));
    CHECK(g.sin_sum == doctest::Approx(0.8));
    MeasureResult r = closed_form_pmax(s);
    CHECK(r.p_max == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.g == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("closed form on the named states")
{
    MeasureResult u = closed_form_pmax(StateVector::uniform(3));
    CHECK(u.p_max == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(u.g < 1e-6);

    // GHZ saturates the relaxation: the formula reports 1 even though the
    // true maximal overlap^2 is 0.5
    MeasureResult g = closed_form_pmax(StateVector::ghz(3));
    CHECK(g.p_max == doctest::Approx(1.0).epsilon(1e-13));

    CHECK_THROWS_AS(closed_form_pmax(StateVector(1, {complex{0, 1}, complex{0, 0}})),
                    std::domain_error);
}

TEST_CASE("closed form reproduces the published n=3 half-step values")
{
    EvolutionTrace tr = run_trace(3, 7, 2);
    // g = sqrt(1-p) amplifies rounding near p = 1, hence the loose first row
    CHECK(closed_form_pmax(tr.steps[0].state).g < 1e-7);
    const double expected[] = {0.378466979033561, 0.267616567329818,
                               0.288892460206902, 0.150953502465377};
    for (std::size_t i = 1; i < tr.steps.size(); ++i)
        CHECK(closed_form_pmax(tr.steps[i].state).g ==
              doctest::Approx(expected[i - 1]).epsilon(1e-9));
}

TEST_CASE("transform path equals the serial reference")
{
    Rng rng(2024);
    for (int c = 0; c < 60; ++c) {
        int n = 1 + c % 6;
        StateVector s = random_real_state(rng, n);
        CHECK(closed_form_pmax(s).p_max ==
              doctest::Approx(reference::closed_form_pmax(s)).epsilon(1e-13));
    }
}

TEST_CASE("render_groups golden files")
{
    CHECK(render_groups(3) == read_file(GROVERIAN_GOLDEN_DIR "/groups_n3.txt"));

    std::string five = render_groups(5);
    std::istringstream got(five);
    std::istringstream want(read_file(GROVERIAN_GOLDEN_DIR "/groups_n5_first6.txt"));
    for (int line = 0; line < 6; ++line) {
        std::string g, w;
        REQUIRE(std::getline(got, g));
        REQUIRE(std::getline(want, w));
        CHECK(g == w);
    }

    CHECK(render_groups(1) == "sqrt[ (+a0)^2 + (+a1)^2 ]\n");
    CHECK_THROWS_AS(render_groups(0), config_error);
    CHECK_THROWS_AS(render_groups(7), config_error);
}

TEST_CASE("render_groups line count")
{
    for (int n = 1; n <= 6; ++n) {
        std::istringstream ss(render_groups(n));
        int lines = 0;
        std::string line;
        while (std::getline(ss, line))
            ++lines;
        CHECK(lines == (1 << (n - 1)));
    }
}
