#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>

#include "pdmosc/coherent.hpp"
#include "pdmosc/specfun.hpp"
#include "pdmosc/verify.hpp"

using namespace pdmosc;
using coherent::CoherentState;
using coherent::Kind;
using massmap::MassProfile;
using cplx = std::complex<double>;

namespace {

double norm_of(const CoherentState& cs) {
    double s = 0.0;
    for (const auto& c : cs.coeffs) s += std::norm(c);
    return std::sqrt(s);
}

xspace::PdmSystem v5_system(double g0) {
    return xspace::make_singular(MassProfile::exponential(1.0, 1.0), g0);
}

}  // namespace

TEST_CASE("z = 0 collapses every family to the ground state") {
    const auto linear = xspace::make_linear(MassProfile::constant_mass());
    const auto sys = v5_system(2.0);
    for (auto [kind, system] :
         {std::pair{Kind::Glauber, linear},
          std::pair{Kind::BarutGirardello, sys},
          std::pair{Kind::Perelomov, sys}}) {
        const auto cs = coherent::build(kind, system, 0.0, 1e-12);
        REQUIRE(cs.coeffs.size() == 1);
        CHECK(cs.coeffs[0] == cplx{1.0, 0.0});
        CHECK(cs.tail_bound == 0.0);
    }
}

TEST_CASE("kind/system pairing is enforced") {
    const auto linear = xspace::make_linear(MassProfile::constant_mass());
    const auto sys = v5_system(2.0);
    CHECK_THROWS_AS(coherent::build(Kind::Glauber, sys, 1.0, 1e-12),
                    std::invalid_argument);
    CHECK_THROWS_AS(coherent::build(Kind::BarutGirardello, linear, 1.0, 1e-12),
                    std::invalid_argument);
    CHECK_THROWS_AS(coherent::build(Kind::Glauber, linear, 1.0, 2.0),
                    std::invalid_argument);
}

TEST_CASE("Barut-Girardello states are normalized by the Bessel prefactor") {
    const auto sys = v5_system(2.0);
    const auto cs = coherent::build(Kind::BarutGirardello, sys, 4.0, 1e-12);
    CHECK(std::abs(norm_of(cs) - 1.0) < 1e-10);
    CHECK(cs.truncation_n >= 8);
    for (double g0 : {0.5, 2.0}) {
        for (cplx z : {cplx{0.5, 0.0}, cplx{2.0, 0.0}, cplx{4.0, 3.0}}) {
            const auto s = coherent::build(Kind::BarutGirardello,
                                           v5_system(g0), z, 1e-12);
            CHECK(std::abs(norm_of(s) - 1.0) < 1e-10);
            CHECK(coherent::eigen_residual(s) <= 1e-8);
        }
    }
}

TEST_CASE("BG normalization identity against bessel_i") {
    for (double g0 : {0.5, 2.0}) {
        const auto prm = yspace::params_from_g0(g0);
        const double tk = 2.0 * prm.kappa;
        for (double zmag : {0.5, 2.0, 5.0, 8.0}) {
            double sum = 0.0;
            for (int l = 0; l < 200; ++l) {
                const double t = std::exp(2.0 * l * std::log(0.25 * zmag) -
                                          specfun::log_gamma(l + 1.0) -
                                          specfun::log_gamma(l + tk));
                sum += t;
                if (l > 4 && t < 1e-18 * sum) break;
            }
            const double rhs = std::pow(0.25 * zmag, 1.0 - tk) *
                               specfun::bessel_i(tk - 1.0, 0.5 * zmag);
            CHECK(std::abs(sum - rhs) <= 1e-10 * std::abs(rhs));
        }
    }
}

TEST_CASE("eigen residuals in coefficient space") {
    const auto linear = xspace::make_linear(MassProfile::constant_mass());
    const auto bg0 =
        coherent::build(Kind::BarutGirardello, v5_system(2.0), 0.0, 1e-12);
    CHECK(coherent::eigen_residual(bg0) == 0.0);
    const auto gl =
        coherent::build(Kind::Glauber, linear, cplx{1.0, 1.0}, 1e-12);
    CHECK(coherent::eigen_residual(gl) <= 1e-8);
    const auto pe =
        coherent::build(Kind::Perelomov, v5_system(2.0), 0.1, 1e-12);
    CHECK_THROWS_AS(coherent::eigen_residual(pe), std::invalid_argument);
}

TEST_CASE("Perelomov norms and the |4z| < 1 disc") {
    const auto sys = v5_system(2.0);
    for (double w : {0.2, 0.5, 0.95}) {
        const auto cs =
            coherent::build(Kind::Perelomov, sys, cplx{0.25 * w, 0.0}, 1e-12);
        CHECK(std::abs(norm_of(cs) - 1.0) < 1e-10);
    }
    CHECK_THROWS_AS(coherent::build(Kind::Perelomov, sys, 0.25, 1e-12),
                    std::domain_error);
    CHECK_THROWS_AS(coherent::build(Kind::Perelomov, sys, cplx{0.3, 0.1}, 1e-12),
                    std::domain_error);
    CHECK(coherent::perelomov_norm_check(*sys.params, cplx{0.125, 0.0}) <=
          1e-10);
    CHECK(coherent::perelomov_norm_check(*sys.params, cplx{0.2375, 0.0}) <=
          1e-8);
    CHECK(coherent::perelomov_norm_check(*sys.params, 0.0) == 0.0);
    CHECK_THROWS_AS(coherent::perelomov_norm_check(*sys.params, 0.25),
                    std::domain_error);
}

TEST_CASE("squeeze label conversion stays inside the disc") {
    CHECK(coherent::squeeze_label_to_z(0.0) == cplx{0.0, 0.0});
    for (cplx xi : {cplx{0.5, 0.0}, cplx{2.0, -1.0}, cplx{30.0, 10.0}}) {
        const cplx z = coherent::squeeze_label_to_z(xi);
        CHECK(4.0 * std::abs(z) < 1.0);
        CHECK(std::abs(4.0 * std::abs(z) - std::tanh(std::abs(xi))) < 1e-14);
    }
}

TEST_CASE("overlaps") {
    const auto linear = xspace::make_linear(MassProfile::constant_mass());
    const auto a = coherent::build(Kind::Glauber, linear, cplx{1.0, 0.0}, 1e-13);
    CHECK(std::abs(coherent::overlap(a, a) - 1.0) < 1e-12);

    const auto b = coherent::build(Kind::Glauber, linear, cplx{1.0, 2.0}, 1e-13);
    CHECK(std::abs(std::abs(coherent::overlap(a, b)) - std::exp(-1.0)) < 1e-8);

    const auto bg1 =
        coherent::build(Kind::BarutGirardello, v5_system(2.0), 1.0, 1e-12);
    const auto bg2 =
        coherent::build(Kind::BarutGirardello, v5_system(2.0), 3.0, 1e-12);
    CHECK(std::abs(coherent::overlap(bg1, bg2)) < 1.0);

    CHECK_THROWS_AS(coherent::overlap(a, bg1), std::invalid_argument);
}

TEST_CASE("displacement operator reproduces the Glauber coefficients") {
    const auto linear = xspace::make_linear(MassProfile::constant_mass());
    CHECK(coherent::displacement_check(linear, 0.0, 16) <= 1e-12);
    CHECK(coherent::displacement_check(linear, cplx{1.0, 0.0}, 40) <= 1e-8);
    CHECK(coherent::displacement_check(linear, cplx{0.0, 2.0}, 60) <= 1e-8);
}

TEST_CASE("coefficients are independent of the mass profile") {
    const cplx z{2.0, 1.0};
    const auto s1 = v5_system(2.0);
    const auto s2 = xspace::make_singular(MassProfile::mdnt0(1.0, 1.0), 2.0);
    const auto s3 = xspace::make_singular(MassProfile::regular(1.0), 2.0);
    const auto c1 = coherent::build(Kind::BarutGirardello, s1, z, 1e-12).coeffs;
    const auto c2 = coherent::build(Kind::BarutGirardello, s2, z, 1e-12).coeffs;
    const auto c3 = coherent::build(Kind::BarutGirardello, s3, z, 1e-12).coeffs;
    REQUIRE(c1.size() == c2.size());
    REQUIRE(c1.size() == c3.size());
    CHECK(std::memcmp(c1.data(), c2.data(), c1.size() * sizeof(cplx)) == 0);
    CHECK(std::memcmp(c1.data(), c3.data(), c1.size() * sizeof(cplx)) == 0);
}

TEST_CASE("evaluation reduces to psi_0 at z = 0 and stays normalized") {
    const auto sys = v5_system(2.0);
    const auto cs = coherent::build(Kind::BarutGirardello, sys, 0.0, 1e-12);
    for (double x : {0.3, 1.1, 2.2})
        CHECK(coherent::evaluate(cs, x).real() ==
              doctest::Approx(xspace::psi_n(sys, 0, x)).epsilon(1e-14));
    CHECK(coherent::evaluate(cs, 0.5).imag() == 0.0);
    CHECK_THROWS_AS(coherent::evaluate(cs, -0.1), std::domain_error);

    const auto cs2 =
        coherent::build(Kind::BarutGirardello, sys, cplx{2.0, 1.0}, 1e-12);
    const double cut = xspace::x_cutoff(sys, cs2.truncation_n);
    const double norm = verify::integrate(
        [&](double x) { return std::norm(coherent::evaluate(cs2, x)); }, 0.0,
        cut, 1e-11);
    CHECK(std::abs(norm - 1.0) < 1e-8);
}

TEST_CASE("constant-mass evaluation matches the direct basis sum") {
    const auto vs = xspace::make_singular(MassProfile::constant_mass(), 2.0);
    const auto cs =
        coherent::build(Kind::BarutGirardello, vs, cplx{1.0, 2.0}, 1e-12);
    for (double y : {0.4, 1.3, 2.6}) {
        cplx want{0.0, 0.0};
        for (std::size_t l = 0; l < cs.coeffs.size(); ++l)
            want += cs.coeffs[l] *
                    yspace::phi_n(*vs.params, static_cast<int>(l), y);
        CHECK(coherent::evaluate(cs, y) == want);
    }
}

TEST_CASE("Glauber states minimize the uncertainty product") {
    const auto linear = xspace::make_linear(MassProfile::constant_mass());
    const auto base = coherent::build(Kind::Glauber, linear, 0.0, 1e-12);
    const double ref = coherent::uncertainty_product(base);
    for (cplx z : {cplx{1.0, 0.0}, cplx{1.0, 1.0}, cplx{0.0, 2.0}}) {
        const auto cs = coherent::build(Kind::Glauber, linear, z, 1e-12);
        CHECK(std::abs(coherent::uncertainty_product(cs) - ref) <= 1e-6);
    }
}
