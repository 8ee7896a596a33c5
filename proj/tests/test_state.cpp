#include <doctest.h>

#include <cmath>

#include "groverian/state.hpp"

using namespace groverian;

namespace {
constexpr double pi = 3.141592653589793;
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
} // namespace

TEST_CASE("named states")
{
    StateVector u3 = StateVector::uniform(3);
    for (std::uint64_t i = 0; i < 8; ++i)
        CHECK(u3.amplitude(i).real() == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-14));

    StateVector b = StateVector::basis(1, 0);
    CHECK(b.amplitude(0) == complex{1.0, 0.0});
    CHECK(b.amplitude(1) == complex{0.0, 0.0});

    StateVector w3 = StateVector::w(3);
    CHECK(w3.amplitude(0b001).real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(w3.amplitude(0b010).real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(w3.amplitude(0b100).real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(w3.amplitude(0b111) == complex{0.0, 0.0});

    StateVector g = StateVector::ghz(3);
    CHECK(g.amplitude(0).real() == doctest::Approx(inv_sqrt2));
    CHECK(g.amplitude(7).real() == doctest::Approx(inv_sqrt2));

    CHECK_THROWS_AS(StateVector::basis(2, 4), std::domain_error);
    CHECK_THROWS_AS(StateVector::uniform(0), std::domain_error);
    CHECK_THROWS_AS(StateVector::uniform(21), std::domain_error);
}

TEST_CASE("constructor rejects bad input")
{
    CHECK_THROWS_AS(StateVector(2, {1.0, 0.0, 0.0}), std::domain_error);     // wrong length
    CHECK_THROWS_AS(StateVector(1, {0.8, 0.7}), std::domain_error);          // not normalized
    CHECK_NOTHROW(StateVector(1, {inv_sqrt2, inv_sqrt2}));
}

TEST_CASE("product_to_state")
{
    StateVector zero = product_to_state(ProductState::real_angles({0.0, 0.0, 0.0}));
    CHECK(zero.amplitude(0).real() == doctest::Approx(1.0));
    for (std::uint64_t i = 1; i < 8; ++i)
        CHECK(std::abs(zero.amplitude(i)) < 1e-15);

    StateVector uni = product_to_state(ProductState::real_angles({pi / 4, pi / 4, pi / 4}));
    for (std::uint64_t i = 0; i < 8; ++i)
        CHECK(uni.amplitude(i).real() == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))));

    // doubled theta range: negative sine without a phase
    StateVector m = product_to_state(ProductState::real_angles({-pi / 4, 0.0, 0.0}));
    CHECK(m.amplitude(0b000).real() == doctest::Approx(inv_sqrt2));
    CHECK(m.amplitude(0b100).real() == doctest::Approx(-inv_sqrt2));
}

TEST_CASE("overlap")
{
    StateVector u3 = StateVector::uniform(3);
    ProductState diag = ProductState::real_angles({pi / 4, pi / 4, pi / 4});
    CHECK(overlap(u3, diag).real() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(overlap(StateVector::basis(3, 0), diag).real() ==
          doctest::Approx(std::pow(inv_sqrt2, 3)));

    CHECK(overlap(StateVector::ghz(3), ProductState::real_angles({0.0, 0.0, 0.0})).real() ==
          doctest::Approx(inv_sqrt2));

    CHECK_THROWS_AS(overlap(u3, ProductState::real_angles({0.0})), std::domain_error);
}

TEST_CASE("reduce_qubit")
{
    // product state: pure marginal
    auto ev = reduce_qubit(StateVector::uniform(3), 1).eigenvalues();
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(0.0).epsilon(1e-12));

    // GHZ: maximally mixed marginal on every qubit
    for (int l = 1; l <= 3; ++l) {
        ReducedDensityMatrix r = reduce_qubit(StateVector::ghz(3), l);
        CHECK(r.rho00.real() == doctest::Approx(0.5));
        CHECK(r.rho11.real() == doctest::Approx(0.5));
        CHECK(std::abs(r.rho01) < 1e-15);
    }

    CHECK_THROWS_AS(reduce_qubit(StateVector::uniform(3), 0), std::domain_error);
    CHECK_THROWS_AS(reduce_qubit(StateVector::uniform(3), 4), std::domain_error);
}

TEST_CASE("bloch_from_rdm")
{
    BlochVector pole = bloch_from_rdm(reduce_qubit(StateVector::basis(1, 0), 1));
    CHECK(pole.x == doctest::Approx(0.0));
    CHECK(pole.z == doctest::Approx(1.0));

    BlochVector mixed = bloch_from_rdm(reduce_qubit(StateVector::ghz(2), 1));
    CHECK(std::abs(mixed.x) < 1e-15);
    CHECK(std::abs(mixed.z) < 1e-15);

    // uniform 3-qubit reduction points along +x
    BlochVector bu = bloch_from_rdm(reduce_qubit(StateVector::uniform(3), 1));
    CHECK(bu.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(bu.y) < 1e-15);
    CHECK(std::abs(bu.z) < 1e-15);
}

TEST_CASE("product state angle validation")
{
    CHECK_THROWS_AS(ProductState::real_angles({2.0}), std::domain_error);
    CHECK_THROWS_AS(ProductState({0.0}, {-0.5}), std::domain_error);
    CHECK_THROWS_AS(ProductState({0.0, 0.0}, {0.0}), std::domain_error);
}
