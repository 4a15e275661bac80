#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "theta/core_eval.hpp"
#include "theta/notation.hpp"
#include "theta/reduction.hpp"

using namespace theta;
using test::rel_err;

TEST_CASE("elliptic K")
{
    const ModularParameter tau_i{Complex{0.0, 1.0}};
    CHECK(std::abs(elliptic_K(tau_i) - 1.85407467730137191843) < 1e-14);
    const ModularParameter t{Complex{0.2, 0.9}};
    CHECK(rel_err(elliptic_K(t), kPi / 2.0 * std::pow(theta::theta(3, 0.0, t), 2)) < 1e-14);
}

TEST_CASE("Riemann's Theta")
{
    test::Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const ModularParameter tau{rng.fundamental_tau()};
        for (int r = 1; r <= 4; ++r)
            CHECK(std::abs(big_theta(r, 0.0, tau) - eval_reduced(r, 0.0, tau)) <= 1e-15 * std::abs(eval_reduced(3, 0.0, tau)));
        const Complex w = rng.box(-1.0, 1.0);
        const Complex two_k = 2.0 * elliptic_K(tau);
        for (int r = 1; r <= 4; ++r)
            CHECK(rel_err(big_theta(r, two_k * w, tau), eval_reduced(r, w, tau)) < 1e-12);
    }
}

TEST_CASE("multiplicative coordinates")
{
    const ModularParameter tau_i{Complex{0.0, 1.0}};
    const auto [z0, q] = multiplicative_coords(0.0, tau_i);
    CHECK(z0 == Complex{1.0, 0.0});
    CHECK(std::abs(q - 0.04321391826377224977) < 1e-17);
    CHECK(std::abs(multiplicative_coords(0.5, tau_i).first - (-1.0)) < 1e-15);

    // Inverting the coordinates recovers u mod 1 and tau mod 2.
    test::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const Complex u{rng.uniform(-0.49, 0.49), rng.uniform(-1.0, 1.0)};
        const ModularParameter tau{Complex{rng.uniform(-0.99, 0.99), rng.uniform(0.1, 3.0)}};
        const auto [z, qq] = multiplicative_coords(u, tau);
        CHECK(std::abs(qq) < 1.0);
        CHECK(rel_err(std::log(z) / (2.0 * kPi * kI), u) < 1e-12);
        CHECK(rel_err(std::log(qq) / (kPi * kI), tau.value()) < 1e-12);
    }
}

TEST_CASE("characteristic conventions")
{
    const ModularParameter tau{Complex{0.1, 1.1}};
    const Complex u{0.3, -0.2};
    CHECK(rel_err(convert_characteristics(CharConvention::W, 0.0, 0.0, u, tau),
                  theta::theta(3, u, tau)) < 1e-12);
    CHECK(std::abs(convert_characteristics(CharConvention::HC, 1.0, 1.0, 0.0, tau)) < 1e-15);
    CHECK(rel_err(convert_characteristics(CharConvention::W, 1.0, 0.0, u, tau),
                  theta_char({-0.5, 0.0}, u, tau)) < 1e-12);

    test::Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = rng.uniform(-2.0, 2.0);
        const double b = rng.uniform(-2.0, 2.0);
        const Complex v = rng.box(-1.0, 1.0);
        // The two conventions differ by a -> -a and a phase.
        const Complex w = convert_characteristics(CharConvention::W, a, b, v, tau);
        const Complex hc = convert_characteristics(CharConvention::HC, -a, b, v, tau);
        CHECK(rel_err(w, std::exp(kI * kPi * a * b / 2.0) * hc) < 1e-12);
        // And both recover theta_{a,b} at doubled characteristics.
        CHECK(rel_err(convert_characteristics(CharConvention::HC, 2.0 * a, 2.0 * b, v, tau),
                      std::exp(-2.0 * kI * kPi * a * b) * theta_char({a, b}, v, tau)) < 1e-12);
    }
}
