#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pdmosc/massmap.hpp"
#include "pdmosc/verify.hpp"
#include "pdmosc/xspace.hpp"
#include "pdmosc/yspace.hpp"

using namespace pdmosc;
using massmap::MassProfile;
using xspace::PdmSystem;
using xspace::PotentialId;

namespace {

GridFunction psi_grid(const PdmSystem& sys, int n, std::size_t npts) {
    const double lo = massmap::inverse_s(sys.profile, 1e-3);
    const double hi = xspace::x_cutoff(sys, n);
    const double h = (hi - lo) / static_cast<double>(npts - 1);
    return sample(lo, h, npts,
                  [&](double x) { return xspace::psi_n(sys, n, x); });
}

}  // namespace

TEST_CASE("potential ids from profiles") {
    CHECK(xspace::make_singular(MassProfile::mdnt0(1, 1), 2.0).id ==
          PotentialId::V1);
    CHECK(xspace::make_singular(MassProfile::mdnt(1, 0, 1), 2.0).id ==
          PotentialId::V2);
    CHECK(xspace::make_singular(MassProfile::regular(1), 2.0).id ==
          PotentialId::V3);
    CHECK(xspace::make_singular(MassProfile::exponential(0.5, 1), 2.0).id ==
          PotentialId::V4);
    CHECK(xspace::make_singular(MassProfile::exponential(1, 1), 2.0).id ==
          PotentialId::V5);
    CHECK(xspace::make_singular(MassProfile::exponential(0, 1), 0.5).id ==
          PotentialId::V6);
    CHECK(xspace::make_singular(MassProfile::exponential(0, 1), 2.0).id ==
          PotentialId::V7);
    CHECK(xspace::make_singular(MassProfile::constant_mass(), 2.0).id ==
          PotentialId::Vsing);
    CHECK(xspace::make_linear(MassProfile::regular(1)).id ==
          PotentialId::LinearPdm);
}

TEST_CASE("potential closed forms at fixed points") {
    const auto v7 = xspace::make_singular(MassProfile::exponential(0, 1), 2.0);
    CHECK(xspace::potential_closed_form(v7, 0.0) == 2.0);
    CHECK(xspace::potential(v7, 0.0) == doctest::Approx(2.0).epsilon(1e-14));

    const auto v6 = xspace::make_singular(MassProfile::exponential(0, 1), 2.0);
    // e^0 + (g0/2) e^0 with g0 = 2.
    CHECK(xspace::potential(v6, 0.0) == doctest::Approx(2.0).epsilon(1e-14));

    const auto v3 = xspace::make_singular(MassProfile::regular(1), 2.0);
    const double w = std::asinh(1.0);
    CHECK(xspace::potential(v3, 1.0) ==
          doctest::Approx(w * w + 1.0 / (w * w)).epsilon(1e-14));
    CHECK(xspace::potential(v3, 1.0) ==
          doctest::Approx(2.0641).epsilon(1e-4));
}

TEST_CASE("closed forms agree with s^2 + g0/(2 s^2) everywhere") {
    const PdmSystem systems[] = {
        xspace::make_singular(MassProfile::mdnt0(1, 1), 2.0),
        xspace::make_singular(MassProfile::mdnt(1, 0, 1), 2.0),
        xspace::make_singular(MassProfile::mdnt(2, 1, 1), 2.0),
        xspace::make_singular(MassProfile::regular(1), 2.0),
        xspace::make_singular(MassProfile::exponential(0.5, 1), 2.0),
        xspace::make_singular(MassProfile::exponential(1, 1), 2.0),
        xspace::make_singular(MassProfile::exponential(0, 1), 0.5),
        xspace::make_singular(MassProfile::exponential(0, 1), 2.0),
        xspace::make_singular(MassProfile::constant_mass(), 2.0)};
    for (const auto& sys : systems) {
        const double lo = massmap::inverse_s(sys.profile, 0.05);
        const double hi = massmap::inverse_s(sys.profile, 6.0);
        for (int i = 0; i <= 200; ++i) {
            const double x = lo + (hi - lo) * i / 200.0;
            const double a = xspace::potential(sys, x);
            const double b = xspace::potential_closed_form(sys, x);
            CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)));
        }
    }
}

TEST_CASE("potential domain error at the centrifugal edge") {
    const auto v5 = xspace::make_singular(MassProfile::exponential(1, 1), 2.0);
    CHECK_THROWS_AS(xspace::potential(v5, 0.0), std::domain_error);
    CHECK_THROWS_AS(xspace::potential(v5, -0.3), std::domain_error);
}

TEST_CASE("psi_n reduces to phi_n on the constant-mass profile") {
    const auto sys = xspace::make_singular(MassProfile::constant_mass(), 2.0);
    const auto prm = *sys.params;
    for (int n : {0, 1, 4}) {
        for (double x : {0.2, 0.9, 1.7, 3.4}) {
            CHECK(xspace::psi_n(sys, n, x) == yspace::phi_n(prm, n, x));
        }
    }
}

TEST_CASE("psi_n vanishes at the domain edge and is normalized") {
    const auto v1 = xspace::make_singular(MassProfile::mdnt0(1, 1), 2.0);
    CHECK(xspace::psi_n(v1, 0, 0.0) == 0.0);
    CHECK(xspace::psi_n(v1, 3, 0.0) == 0.0);
    CHECK_THROWS_AS(xspace::psi_n(v1, 0, -0.5), std::domain_error);

    const auto v5 = xspace::make_singular(MassProfile::exponential(1, 1), 2.0);
    const double norm = verify::integrate(
        [&](double x) {
            const double v = xspace::psi_n(v5, 0, x);
            return v * v;
        },
        0.0, xspace::x_cutoff(v5, 0), 1e-12);
    CHECK(std::abs(norm - 1.0) < 1e-10);
}

TEST_CASE("hamiltonian application reproduces the eigenvalues") {
    const auto v5 = xspace::make_singular(MassProfile::exponential(1, 1), 2.0);
    for (int n : {0, 3}) {
        GridFunction psi = psi_grid(v5, n, 20001);
        GridFunction hpsi = xspace::apply_hamiltonian(v5, psi);
        const double e = yspace::energy(*v5.params, n);
        GridFunction resid = hpsi;
        for (std::size_t i = 0; i < resid.size(); ++i)
            resid.values[i] -= e * psi.values[i];
        const double r =
            verify::masked_l2_ratio(resid, psi, xspace::residual_mask(v5, psi));
        CHECK(r <= 1e-4);
    }
}

TEST_CASE("constant-mass hamiltonian equals the y-space operator bitwise") {
    const auto vs = xspace::make_singular(MassProfile::constant_mass(), 2.0);
    GridFunction f = sample(0.5, 0.01, 601, [](double x) {
        return std::exp(-(x - 3.0) * (x - 3.0));
    });
    GridFunction a = xspace::apply_hamiltonian(vs, f);
    // The same staged product with m = 1 collapses to -f'' + V f.
    GridFunction d2 = verify::derivative(verify::derivative(f, 1), 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = f.x(i);
        const double want = -d2.values[i] +
                            (x * x + 1.0 / (x * x)) * f.values[i];
        CHECK(a.values[i] == want);
    }
}

TEST_CASE("riccati residual vanishes on the catalog") {
    const MassProfile profiles[] = {
        MassProfile::constant_mass(), MassProfile::regular(1.0),
        MassProfile::mdnt0(1.0, 1.0), MassProfile::mdnt(1, 1.0, 1.0),
        MassProfile::mdnt(2, 1.0, 1.0)};
    for (const auto& p : profiles) {
        for (double y : {0.5, 1.0, 2.0}) {
            const double x = massmap::inverse_s(p, y);
            const double s = massmap::bijection_s(p, x);
            CHECK(std::abs(xspace::riccati_residual(p, x)) <=
                  1e-9 * (1.0 + s * s));
        }
    }
    // Constant mass: beta reduces to the harmonic superpotential s(x) = x.
    CHECK(xspace::riccati_beta(MassProfile::constant_mass(), 0.8) == 0.8);
    CHECK(std::abs(xspace::riccati_residual(MassProfile::constant_mass(), 0.8)) <
          1e-10);
}

TEST_CASE("factorization operators act as ladder operators") {
    const PdmSystem systems[] = {
        xspace::make_linear(MassProfile::constant_mass()),
        xspace::make_linear(MassProfile::regular(1.0)),
        xspace::make_linear(MassProfile::mdnt0(1.0, 1.0))};
    for (const auto& sys : systems) {
        const double ylo = -3.5, yhi = 3.5;
        const double xlo = massmap::inverse_s(sys.profile, ylo);
        const double xhi = massmap::inverse_s(sys.profile, yhi);
        const std::size_t npts = 24001;
        const double h = (xhi - xlo) / static_cast<double>(npts - 1);
        GridFunction psi0 = sample(xlo, h, npts, [&](double x) {
            return xspace::psi_n(sys, 0, x);
        });

        // B annihilates the ground state.
        GridFunction b0 = xspace::apply_B(sys, psi0);
        CHECK(verify::masked_sup_ratio(b0, psi0, verify::edge_mask(npts, 3)) <=
              1e-5);

        // B psi_k = sqrt(2k) psi_{k-1}.
        for (int k : {1, 2}) {
            GridFunction psik = sample(xlo, h, npts, [&](double x) {
                return xspace::psi_n(sys, k, x);
            });
            GridFunction bk = xspace::apply_B(sys, psik);
            GridFunction target = sample(xlo, h, npts, [&](double x) {
                return std::sqrt(2.0 * k) * xspace::psi_n(sys, k - 1, x);
            });
            GridFunction diff = bk;
            for (std::size_t i = 0; i < diff.size(); ++i)
                diff.values[i] -= target.values[i];
            CHECK(verify::masked_sup_ratio(diff, target,
                                           verify::edge_mask(npts, 3)) <= 1e-4);
        }

        // (AB - BA) f = -2 f on a smooth compactly supported f.
        GridFunction f = sample(xlo, h, npts, [&](double x) {
            const double y = massmap::bijection_s(sys.profile, x);
            const double u = (y - 0.8) / 0.5;
            return std::exp(-u * u);
        });
        GridFunction ab = xspace::apply_A(sys, xspace::apply_B(sys, f));
        GridFunction ba = xspace::apply_B(sys, xspace::apply_A(sys, f));
        GridFunction resid = f;
        for (std::size_t i = 0; i < f.size(); ++i)
            resid.values[i] = ab.values[i] - ba.values[i] + 2.0 * f.values[i];
        CHECK(verify::masked_sup_ratio(resid, f, verify::edge_mask(npts, 6)) <=
              1e-3);
    }
}

TEST_CASE("su(1,1) generators on eigenfunctions") {
    const auto v5 = xspace::make_singular(MassProfile::exponential(1, 1), 2.0);
    const auto prm = *v5.params;
    GridFunction psi0 = psi_grid(v5, 0, 20001);
    const auto mask = xspace::residual_mask(v5, psi0);

    GridFunction dn = xspace::apply_Cpm(v5, psi0, yspace::Ladder::Lower);
    CHECK(verify::masked_sup_ratio(dn, psi0, mask) /
              yspace::gamma_plus(prm, 0) <=
          1e-3);

    GridFunction up = xspace::apply_Cpm(v5, psi0, yspace::Ladder::Raise);
    GridFunction target = psi0;
    for (std::size_t i = 0; i < target.size(); ++i)
        target.values[i] =
            yspace::gamma_plus(prm, 0) * xspace::psi_n(v5, 1, target.x(i));
    GridFunction diff = up;
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff.values[i] -= target.values[i];
    CHECK(verify::masked_sup_ratio(diff, target, mask) <= 1e-3);
}

TEST_CASE("partner potential sits exactly two units above") {
    for (const auto& p :
         {MassProfile::constant_mass(), MassProfile::regular(1.0),
          MassProfile::mdnt0(1.0, 1.0), MassProfile::mdnt(1, 1.0, 1.0)}) {
        const auto r = xspace::partner_shift_check(xspace::make_linear(p));
        CHECK(r.residual <= 1e-9);
        CHECK(r.passed);
    }
}

TEST_CASE("isospectrality carries the y-space energies unchanged") {
    const auto v3 = xspace::make_singular(MassProfile::regular(1), 2.0);
    GridFunction psi = psi_grid(v3, 2, 40001);
    GridFunction hpsi = xspace::apply_hamiltonian(v3, psi);
    const double e = yspace::energy(*v3.params, 2);
    GridFunction resid = hpsi;
    for (std::size_t i = 0; i < resid.size(); ++i)
        resid.values[i] -= e * psi.values[i];
    CHECK(verify::masked_l2_ratio(resid, psi, xspace::residual_mask(v3, psi)) <=
          1e-4);
}

TEST_CASE("norms are preserved under the point transformation") {
    const auto v2 = xspace::make_singular(MassProfile::mdnt(1, 0, 1), 2.0);
    const auto prm = *v2.params;
    for (int n : {0, 2}) {
        const double ny = verify::integrate(
            [&](double y) {
                const double v = yspace::phi_n(prm, n, y);
                return v * v;
            },
            0.0, yspace::phi_cutoff(prm, n), 1e-12);
        const double nx = verify::integrate(
            [&](double x) {
                const double v = xspace::psi_n(v2, n, x);
                return v * v;
            },
            xspace::x_lower(v2), xspace::x_cutoff(v2, n), 1e-12);
        CHECK(std::abs(nx - ny) < 1e-10);
    }
}
