#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pdmosc/specfun.hpp"
#include "pdmosc/verify.hpp"
#include "pdmosc/yspace.hpp"

using namespace pdmosc;
using yspace::SingularParams;

TEST_CASE("parameters derived from g0") {
    const auto p0 = yspace::params_from_g0(0.0);
    CHECK(p0.alpha == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p0.kappa == doctest::Approx(0.75).epsilon(1e-15));

    const auto p2 = yspace::params_from_g0(2.0);
    CHECK(p2.alpha == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
    CHECK(p2.kappa == doctest::Approx(0.5 * (0.5 + p2.alpha)).epsilon(1e-14));

    const auto p32 = yspace::params_from_g0(1.5);
    CHECK(p32.alpha == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(p32.kappa == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(yspace::params_from_g0(-0.5), std::domain_error);
    CHECK_THROWS_AS(yspace::params_from_g0(-0.8), std::domain_error);
}

TEST_CASE("alpha solves alpha^2 - alpha - g0/2 = 0") {
    for (double g0 : {0.1, 0.5, 1.0, 2.0, 3.5, 10.0}) {
        const auto p = yspace::params_from_g0(g0);
        CHECK(std::abs(p.alpha * p.alpha - p.alpha - 0.5 * g0) < 1e-13);
    }
}

TEST_CASE("energies") {
    const auto p0 = yspace::params_from_g0(0.0);
    CHECK(yspace::energy(p0, 0) == 3.0);
    CHECK(yspace::energy(p0, 2) == 11.0);
    const auto p2 = yspace::params_from_g0(2.0);
    CHECK(yspace::energy(p2, 0) ==
          doctest::Approx(2.0 + std::sqrt(5.0)).epsilon(1e-15));
    for (int n = 1; n < 8; ++n)
        CHECK(yspace::energy(p2, n) - yspace::energy(p2, n - 1) ==
              doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("phi_n is normalized and vanishes like y^alpha at the origin") {
    const auto p = yspace::params_from_g0(2.0);
    const double norm = verify::integrate(
        [&](double y) {
            const double v = yspace::phi_n(p, 0, y);
            return v * v;
        },
        0.0, yspace::phi_cutoff(p, 0), 1e-12);
    CHECK(std::abs(norm - 1.0) < 1e-10);

    // phi(2t)/phi(t) -> 2^alpha as t -> 0.
    const double t = 1e-5;
    const double ratio = yspace::phi_n(p, 0, 2.0 * t) / yspace::phi_n(p, 0, t);
    CHECK(ratio == doctest::Approx(std::pow(2.0, p.alpha)).epsilon(1e-6));

    CHECK_THROWS_AS(yspace::phi_n(p, 0, 0.0), std::domain_error);
    CHECK_THROWS_AS(yspace::phi_n(p, 0, -1.0), std::domain_error);
}

TEST_CASE("g0 = 0 branch has the odd-oscillator node structure") {
    const auto p = yspace::params_from_g0(0.0);
    // Node of phi_1 at the positive zero of L_1^{(1/2)}(y^2): y = sqrt(3/2).
    const double y0 = std::sqrt(1.5);
    CHECK(std::abs(yspace::phi_n(p, 1, y0)) < 1e-12);
    CHECK(yspace::phi_n(p, 1, y0 - 0.2) * yspace::phi_n(p, 1, y0 + 0.2) < 0.0);
    // Quadrature normalization matches the closed form
    // sqrt(2 / (2^(2n+1) (2n+1)! sqrt(pi))).
    for (int n = 0; n <= 4; ++n) {
        const double want =
            std::sqrt(2.0 / (std::pow(2.0, 2 * n + 1) *
                             specfun::gamma(2.0 * n + 2.0) * std::sqrt(M_PI)));
        CHECK(yspace::hermite_normalization(n) ==
              doctest::Approx(want).epsilon(1e-11));
    }
}

TEST_CASE("orthonormality of phi_n under quadrature") {
    const auto p = yspace::params_from_g0(2.0);
    const double cut = yspace::phi_cutoff(p, 8);
    for (int i = 0; i <= 8; ++i)
        for (int j = i; j <= 8; ++j) {
            const double g = verify::integrate(
                [&](double y) {
                    return yspace::phi_n(p, i, y) * yspace::phi_n(p, j, y);
                },
                0.0, cut, 1e-12);
            CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) < 1e-8);
        }
}

TEST_CASE("kummer route reproduces phi_n") {
    const auto p = yspace::params_from_g0(2.0);
    for (int n : {0, 1, 3}) {
        const double e = yspace::energy(p, n);
        // lambda1 carries the normalization of the terminating branch:
        // c_n = sqrt(2 n! / Gamma(alpha+n+1/2)) * (alpha+1/2)_n / n!.
        const double l1 =
            std::sqrt(2.0 * specfun::gamma(n + 1.0) /
                      specfun::gamma(p.alpha + n + 0.5)) *
            specfun::pochhammer(p.alpha + 0.5, n) / specfun::gamma(n + 1.0);
        for (double y = 0.1; y <= 5.0; y += 0.3) {
            const double a = yspace::kummer_phi(p, e, l1, 0.0, y);
            const double b = yspace::phi_n(p, n, y);
            CHECK(std::abs(a - b) <= 1e-9 * (1.0 + std::abs(b)));
        }
    }
    CHECK(yspace::kummer_phi(p, 5.3, 0.0, 0.0, 1.0) == 0.0);
}

TEST_CASE("kummer route grows like e^{y^2/2} off the spectrum") {
    const auto p = yspace::params_from_g0(2.0);
    const double e = 5.3;  // not an eigenvalue
    const double r43 =
        yspace::kummer_phi(p, e, 1.0, 0.0, 4.0) /
        yspace::kummer_phi(p, e, 1.0, 0.0, 3.0);
    const double asym =
        std::pow(4.0 / 3.0, -(e + 1.0) / 2.0) * std::exp((16.0 - 9.0) / 2.0);
    CHECK(std::abs(r43) / asym > 0.5);
    CHECK(std::abs(r43) / asym < 2.0);
}

TEST_CASE("kummer route rejects degenerate parameters") {
    const auto p = yspace::params_from_g0(1.5);  // alpha = 3/2 -> ct = 0
    CHECK_THROWS_AS(yspace::kummer_phi(p, 4.0, 1.0, 0.0, 1.0),
                    std::domain_error);
}

TEST_CASE("ladder coefficients") {
    const auto p = yspace::params_from_g0(2.0);
    CHECK(yspace::gamma_minus(p, 0) == 0.0);
    CHECK(yspace::gamma_plus(p, 0) ==
          doctest::Approx(4.0 * std::sqrt(2.0 * p.kappa)).epsilon(1e-14));
    for (double g0 : {0.5, 2.0, 3.5}) {
        const auto prm = yspace::params_from_g0(g0);
        for (int n = 0; n <= 20; ++n) {
            const double e = yspace::energy(prm, n);
            const double lhs =
                yspace::gamma_plus(prm, n) * yspace::gamma_minus(prm, n + 1);
            const double rhs = e * e + 4.0 * e + 3.0 - 2.0 * g0;
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("coefficient-space ladder actions") {
    const auto p = yspace::params_from_g0(2.0);
    yspace::FockVector e0{yspace::BasisKind::Singular, p, {{1.0, 0.0}}};
    const auto lowered = yspace::apply_ladder(e0, yspace::Ladder::Lower);
    for (const auto& c : lowered.coeffs) CHECK(std::abs(c) == 0.0);

    const auto raised = yspace::apply_ladder(e0, yspace::Ladder::Raise);
    REQUIRE(raised.coeffs.size() == 2);
    CHECK(raised.coeffs[1].real() == yspace::gamma_plus(p, 0));

    yspace::FockVector e2{yspace::BasisKind::Singular, p,
                          {{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}};
    const auto back = yspace::apply_ladder(
        yspace::apply_ladder(e2, yspace::Ladder::Raise), yspace::Ladder::Lower);
    REQUIRE(back.coeffs.size() == 3);
    CHECK(back.coeffs[2].real() ==
          yspace::gamma_plus(p, 2) * yspace::gamma_minus(p, 3));
}

TEST_CASE("casimir value both ways") {
    CHECK(yspace::casimir_value(yspace::params_from_g0(0.0)) == 3.0 / 16.0);
    const auto p32 = yspace::params_from_g0(1.5);
    CHECK(yspace::casimir_value(p32) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(p32.kappa * (1.0 - p32.kappa) == doctest::Approx(0.0).epsilon(1e-15));
    const auto p2 = yspace::params_from_g0(2.0);
    CHECK(yspace::casimir_value(p2) == doctest::Approx(-1.0 / 16.0));
    CHECK(std::abs(yspace::casimir_value(p2) - p2.kappa * (1.0 - p2.kappa)) <
          1e-12);
}

TEST_CASE("linear oscillator basis") {
    CHECK(yspace::linear_ladder_coeff(yspace::Ladder::Lower, 0) == 0.0);
    // a+ a- phi_1 = 2 phi_1: sqrt(2*1) * sqrt(2*1) = 2.
    CHECK(yspace::linear_ladder_coeff(yspace::Ladder::Lower, 1) *
              yspace::linear_ladder_coeff(yspace::Ladder::Raise, 0) ==
          doctest::Approx(2.0).epsilon(1e-15));
    const double cut = yspace::linear_cutoff(8);
    for (int k = 0; k <= 8; ++k)
        for (int j = k; j <= 8; ++j) {
            const double g = verify::integrate(
                [&](double y) {
                    return yspace::linear_phi(k, y) * yspace::linear_phi(j, y);
                },
                -cut, cut, 1e-12);
            CHECK(std::abs(g - (k == j ? 1.0 : 0.0)) < 1e-10);
        }
}

TEST_CASE("g0 -> 0 reduces phi_n to the odd-oscillator branch") {
    const auto tiny = yspace::params_from_g0(1e-8);
    const auto zero = yspace::params_from_g0(0.0);
    for (int n = 0; n <= 3; ++n) {
        double worst = 0.0;
        for (double y = 0.02; y <= 6.0; y += 0.02)
            worst = std::max(worst, std::abs(yspace::phi_n(tiny, n, y) -
                                             yspace::phi_n(zero, n, y)));
        CHECK(worst <= 1e-3);
    }
}
