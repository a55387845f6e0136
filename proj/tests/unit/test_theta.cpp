#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hyperu/error.hpp"
#include "hyperu/theta.hpp"
#include "sampling.hpp"

using namespace hyperu;
using namespace hyperu::testing;

namespace {

constexpr double kPi = std::numbers::pi;

// Plain box sum written out per genus, used as an independent reference.
Complex reference_theta(const ComplexVector &z, const SiegelPoint &omega, int radius)
{
    const auto &w = omega.matrix();
    const int g = omega.genus();
    Complex sum = 0;
    auto term = [&](const std::vector<int> &n) {
        Complex q = 0, l = 0;
        for (int i = 0; i < g; ++i) {
            l += double(n[i]) * z(i);
            for (int j = 0; j < g; ++j)
                q += double(n[i]) * w(i, j) * double(n[j]);
        }
        return std::exp(Complex(0, kPi) * q + Complex(0, 2 * kPi) * l);
    };
    if (g == 1) {
        for (int a = -radius; a <= radius; ++a)
            sum += term({a});
    } else if (g == 2) {
        for (int a = -radius; a <= radius; ++a)
            for (int b = -radius; b <= radius; ++b)
                sum += term({a, b});
    } else {
        FAIL("reference only for g <= 2");
    }
    return sum;
}

ComplexVector vec(std::initializer_list<Complex> xs)
{
    ComplexVector v(xs.size());
    int i = 0;
    for (auto x : xs)
        v(i++) = x;
    return v;
}

const double kThetaAtI = 1.086434811213308;

} // namespace

TEST_CASE("theta at tau = i")
{
    const auto i = tau_point(Complex(0, 1));
    const Complex t = theta(vec({0}), i);
    CHECK(std::abs(t - kThetaAtI) <= 1e-12);
    CHECK(std::abs(t - std::pow(kPi, 0.25) / std::tgamma(0.75)) <= 1e-12);
    double series = 0;
    for (int n = -50; n <= 50; ++n)
        series += std::exp(-kPi * n * n);
    CHECK(std::abs(t - series) <= 1e-13);
}

TEST_CASE("theta vanishes at the odd two-torsion point")
{
    const auto i = tau_point(Complex(0, 1));
    CHECK(std::abs(theta(vec({Complex(0.5, 0.5)}), i)) <= 1e-10);
    CHECK(std::abs(theta(two_torsion_point(i, Characteristic(1, 1, 1)), i)) <= 1e-10);
    const auto p = two_torsion_point(i, Characteristic(1, 1, 0));
    CHECK(std::abs(p(0) - Complex(0, 0.5)) < 1e-15);
}

TEST_CASE("theta factorizes for diagonal period matrices")
{
    const Complex t = theta(vec({0}), tau_point(Complex(0, 1)));
    const Complex t2 = theta(vec({0, 0}), scaled_identity_point(2));
    CHECK(std::abs(t2 - t * t) <= 1e-10 * std::abs(t * t));

    ComplexMatrix w = ComplexMatrix::Zero(2, 2);
    w(0, 0) = Complex(0.3, 0.9);
    w(1, 1) = Complex(-0.4, 1.7);
    const auto z = vec({Complex(0.1, 0.2), Complex(-0.3, 0.05)});
    const Complex prod = theta(vec({z(0)}), tau_point(w(0, 0))) * theta(vec({z(1)}), tau_point(w(1, 1)));
    CHECK(std::abs(theta(z, SiegelPoint(w)) - prod) <= 1e-10 * std::abs(prod));
}

TEST_CASE("theta agrees with an independent box sum")
{
    Rng rng(41);
    for (int g = 1; g <= 2; ++g)
        for (int k = 0; k < 10; ++k) {
            const auto omega = random_omega(g, rng);
            const auto z = random_z(g, rng);
            const Complex ref = reference_theta(z, omega, 15);
            CHECK(std::abs(theta(z, omega) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
        }
}

TEST_CASE("truncation self-consistency")
{
    Rng rng(42);
    const ThetaConfig cfg;
    for (int k = 0; k < 50; ++k) {
        const int g = 1 + k % 3;
        const auto omega = random_omega(g, rng, 0.5);
        REQUIRE(omega.lambda_min() >= 0.5);
        const auto z = random_z(g, rng);
        const auto v = theta_checked(z, omega, cfg);
        const Complex wider = theta_partial_sum(z, omega, v.radius + 4);
        CHECK(std::abs(v.value - wider) <= 10 * cfg.tol);
        CHECK(v.radius >= theta_radius_estimate(z, omega, cfg));
    }
}

TEST_CASE("quasi-periodicity")
{
    const auto i = tau_point(Complex(0, 1));
    CHECK(quasi_period_residual(vec({Complex(0.3, 0.2)}), i, {1}, {0}) <= 1e-10);
    CHECK(quasi_period_residual(vec({Complex(0.3, 0.2)}), i, {0}, {1}) <= 1e-10);
    CHECK(quasi_period_residual(vec({Complex(0.3, 0.2)}), i, {0}, {0}) == 0.0);

    Rng rng(43);
    for (int k = 0; k < 60; ++k) {
        const int g = 1 + k % 3;
        const auto omega = random_omega(g, rng);
        const auto z = random_z(g, rng);
        CHECK(quasi_period_residual(z, omega, IntVector(g, 0), random_lattice_vector(g, rng)) <= 1e-10);
        CHECK(quasi_period_residual(z, omega, random_lattice_vector(g, rng), random_lattice_vector(g, rng)) <=
              1e-9);
    }
    CHECK_THROWS_AS(quasi_period_residual(vec({0}), i, {1, 0}, {0}), Error);
}

TEST_CASE("theta is even in z")
{
    Rng rng(44);
    for (int k = 0; k < 30; ++k) {
        const int g = 1 + k % 3;
        const auto omega = random_omega(g, rng);
        const auto z = random_z(g, rng);
        const Complex a = theta(z, omega);
        CHECK(std::abs(a - theta(-z, omega)) <= 1e-10 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("truncation failure and configuration errors")
{
    ThetaConfig cfg;
    cfg.max_radius = 2;
    const auto thin = tau_point(Complex(0, 0.01));
    try {
        theta(vec({0}), thin, cfg);
        FAIL("expected truncation failure");
    } catch (const TruncationError &e) {
        CHECK(e.code() == ErrorCode::truncation_failure);
        CHECK(e.radius() <= cfg.max_radius);
        CHECK(e.previous() != e.last());
    }
    ThetaConfig bad;
    bad.tol = 0;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = ThetaConfig{};
    bad.vanish_rel = 1.5;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = ThetaConfig{};
    bad.max_radius = 0;
    CHECK_THROWS_AS(bad.validate(), Error);
    CHECK_THROWS_AS(theta(vec({0, 0}), tau_point(Complex(0, 1))), Error);
}

TEST_CASE("two-torsion tables")
{
    const auto t1 = two_torsion_table(tau_point(Complex(0, 1)));
    CHECK(t1.values.size() == 4);
    CHECK(t1.scale > 0);
    const auto p1 = vanishing_pattern(t1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == Characteristic(1, 1, 1));
    CHECK(vanishing_pattern(two_torsion_table(tau_point(Complex(0.3, 0.9)))) == p1);

    const auto generic = two_torsion_table(generic_genus2_omega());
    CHECK(vanishing_pattern(generic) == enumerate_by_parity(2).odds);

    const auto split = two_torsion_table(scaled_identity_point(2));
    const auto p = vanishing_pattern(split);
    CHECK(p.size() == 7);
    for (const auto &x : p) {
        const bool first_odd = x.top_bit(0) && x.bottom_bit(0);
        const bool second_odd = x.top_bit(1) && x.bottom_bit(1);
        CHECK((first_odd || second_odd));
    }
    CHECK_THROWS_AS(two_torsion_table(scaled_identity_point(kMaxTableGenus + 1)), Error);
}

TEST_CASE("pattern matches parity for random generic genus-2 matrices")
{
    Rng rng(45);
    const auto odds = enumerate_by_parity(2).odds;
    for (int k = 0; k < 20; ++k)
        CHECK(vanishing_pattern(two_torsion_table(random_generic_omega(2, rng))) == odds);
}

TEST_CASE("vanishing criterion")
{
    const auto r1 = check_vanishing_criterion(tau_point(Complex(0, 1)), base_eta(1));
    CHECK(r1.holds);
    CHECK(r1.classes == 4);
    CHECK(r1.vanishing == 1);
    CHECK(r1.failures.empty());

    const auto r2 = check_vanishing_criterion(generic_genus2_omega(), base_eta(2));
    CHECK(r2.holds);
    CHECK(r2.classes == 16);
    CHECK(r2.vanishing == 6);

    const auto split = two_torsion_table(scaled_identity_point(2));
    const auto eta = base_eta(2);
    for (const auto &u : enumerate_admissible_u(2)) {
        const auto r = check_vanishing_criterion(split, eta, u);
        CHECK_FALSE(r.holds);
        CHECK(r.vanishing == 7);
        CHECK_FALSE(r.failures.empty());
    }
    CHECK_THROWS_AS(check_vanishing_criterion(tau_point(Complex(0, 1)), eta), Error);
}

TEST_CASE("criterion is invariant inside Gamma_{1,2} at g=1")
{
    Rng rng(46);
    const auto tau = tau_point(Complex(0, 1));
    const auto eta = base_eta(1);
    for (int k = 0; k < 20; ++k) {
        const auto gamma = random_gamma12_word(1, rng, 6);
        const auto moved_eta = transform_eta(gamma, eta);
        CHECK(u_set(moved_eta) == u_set(eta));
        CHECK(check_vanishing_criterion(act_on_siegel(gamma, tau), moved_eta).holds);
    }
}
