#include "pdmosc/xspace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pdmosc::xspace {

using massmap::Kind;
using massmap::MassProfile;

const char* potential_name(PotentialId id) {
    switch (id) {
        case PotentialId::V1: return "V1";
        case PotentialId::V2: return "V2";
        case PotentialId::V3: return "V3";
        case PotentialId::V4: return "V4";
        case PotentialId::V5: return "V5";
        case PotentialId::V6: return "V6";
        case PotentialId::V7: return "V7";
        case PotentialId::Vsing: return "Vsing";
        case PotentialId::LinearPdm: return "LinearPdm";
    }
    return "?";
}

PdmSystem make_singular(const MassProfile& profile, double g0) {
    PdmSystem sys;
    sys.profile = profile;
    sys.params = yspace::params_from_g0(g0);
    switch (profile.kind) {
        case Kind::Mdnt0: sys.id = PotentialId::V1; break;
        case Kind::MdntN: sys.id = PotentialId::V2; break;
        case Kind::Regular: sys.id = PotentialId::V3; break;
        case Kind::Exponential:
            if (profile.x0 == 1.0)
                sys.id = PotentialId::V5;
            else if (profile.x0 == 0.0)
                sys.id = (g0 == 2.0 && profile.lambda == 1.0) ? PotentialId::V7
                                                              : PotentialId::V6;
            else
                sys.id = PotentialId::V4;
            break;
        case Kind::ConstantMass: sys.id = PotentialId::Vsing; break;
    }
    return sys;
}

PdmSystem make_linear(const MassProfile& profile) {
    PdmSystem sys;
    sys.profile = profile;
    sys.id = PotentialId::LinearPdm;
    return sys;
}

bool same_system(const PdmSystem& a, const PdmSystem& b) {
    if (!(a.profile == b.profile) || a.id != b.id) return false;
    if (a.params.has_value() != b.params.has_value()) return false;
    return !a.params || a.params->g0 == b.params->g0;
}

double potential(const PdmSystem& sys, double x) {
    const double s = massmap::bijection_s(sys.profile, x);
    if (!sys.params) return s * s;
    if (s <= 0.0)
        throw std::domain_error("potential: x at or below the centrifugal edge");
    return s * s + sys.params->g0 / (2.0 * s * s);
}

double potential_closed_form(const PdmSystem& sys, double x) {
    const MassProfile& p = sys.profile;
    const double g0 = sys.params ? sys.params->g0 : 0.0;
    const double l = p.lambda;
    switch (sys.id) {
        case PotentialId::V1: {
            const double w = std::log(p.x0 + l * x);
            return w * w / (l * l) + g0 * l * l / (2.0 * w * w);
        }
        case PotentialId::V2: {
            const double m = 2.0 * p.n + 1.0;
            const double u = p.x0 + l * x;
            return (m / l) * (m / l) * std::pow(u, 2.0 / m) +
                   0.5 * g0 * (l / m) * (l / m) * std::pow(u, -2.0 / m);
        }
        case PotentialId::V3: {
            const double w = std::asinh(l * x);
            return w * w / (l * l) + g0 * l * l / (2.0 * w * w);
        }
        case PotentialId::V4:
        case PotentialId::V5: {
            if (sys.id == PotentialId::V5) {
                const double sh = std::sinh(0.5 * l * x);
                return 4.0 * std::exp(l * x) * sh * sh / (l * l) +
                       g0 * l * l * std::exp(-l * x) / (8.0 * sh * sh);
            }
            const double w = std::exp(l * x) - p.x0;
            return (w / l) * (w / l) + g0 * l * l / (2.0 * w * w);
        }
        case PotentialId::V6:
            return std::exp(2.0 * l * x) / (l * l) +
                   0.5 * g0 * l * l * std::exp(-2.0 * l * x);
        case PotentialId::V7:
            return 2.0 * std::cosh(2.0 * x);
        case PotentialId::Vsing:
            return x * x + g0 / (2.0 * x * x);
        case PotentialId::LinearPdm: {
            const double s = massmap::bijection_s(p, x);
            return s * s;
        }
    }
    throw std::logic_error("potential_closed_form: unknown id");
}

double x_lower(const PdmSystem& sys) {
    if (sys.params) return sys.profile.x_min;
    return massmap::lower_edge(sys.profile);
}

double psi_n(const PdmSystem& sys, int n, double x) {
    const MassProfile& p = sys.profile;
    if (!sys.params) {
        const double y = massmap::bijection_s(p, x);
        return std::sqrt(massmap::jacobian(p, x)) * yspace::linear_phi(n, y);
    }
    const double xm = p.x_min;
    if (x < xm) throw std::domain_error("psi_n: x below the domain");
    if (x == xm) {
        if (p.kind == Kind::MdntN)
            throw std::domain_error("psi_n: edge value undefined (J diverges)");
        return 0.0;
    }
    const double y = massmap::bijection_s(p, x);
    if (y <= 0.0) return 0.0;
    return std::sqrt(massmap::jacobian(p, x)) * yspace::phi_n(*sys.params, n, y);
}

double x_cutoff(const PdmSystem& sys, int n) {
    const double ycut = sys.params ? yspace::phi_cutoff(*sys.params, n)
                                   : yspace::linear_cutoff(n);
    return massmap::inverse_s(sys.profile, ycut);
}

GridFunction apply_hamiltonian(const PdmSystem& sys, const GridFunction& f) {
    const MassProfile& p = sys.profile;
    const double a = p.ordering_a;
    const double two_b = -1.0 - 2.0 * a;
    const std::size_t n = f.size();

    GridFunction u = f;
    for (std::size_t i = 0; i < n; ++i)
        u.values[i] = std::pow(massmap::mass(p, f.x(i)), a) * f.values[i];
    GridFunction v = verify::derivative(u, 1);
    for (std::size_t i = 0; i < n; ++i)
        v.values[i] *= std::pow(massmap::mass(p, f.x(i)), two_b);
    GridFunction t = verify::derivative(v, 1);

    GridFunction out = f;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = f.x(i);
        out.values[i] = -std::pow(massmap::mass(p, x), a) * t.values[i] +
                        potential(sys, x) * f.values[i];
    }
    return out;
}

namespace {

GridFunction apply_first_order(const PdmSystem& sys, const GridFunction& f,
                               double deriv_sign) {
    const MassProfile& p = sys.profile;
    GridFunction df = verify::derivative(f, 1);
    GridFunction out = f;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = f.x(i);
        const double j = massmap::jacobian(p, x);
        const double logj_y = massmap::jacobian_d1(p, x) / (j * j);
        out.values[i] = deriv_sign * df.values[i] / j +
                        massmap::bijection_s(p, x) * f.values[i] -
                        deriv_sign * 0.5 * logj_y * f.values[i];
    }
    return out;
}

}  // namespace

GridFunction apply_A(const PdmSystem& sys, const GridFunction& f) {
    return apply_first_order(sys, f, -1.0);
}

GridFunction apply_B(const PdmSystem& sys, const GridFunction& f) {
    return apply_first_order(sys, f, +1.0);
}

GridFunction apply_Cpm(const PdmSystem& sys, const GridFunction& f,
                       yspace::Ladder direction) {
    if (!sys.params)
        throw std::invalid_argument("apply_Cpm: singular system required");
    GridFunction g = direction == yspace::Ladder::Raise
                         ? apply_A(sys, apply_A(sys, f))
                         : apply_B(sys, apply_B(sys, f));
    const double g0 = sys.params->g0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double s = massmap::bijection_s(sys.profile, f.x(i));
        g.values[i] -= g0 / (2.0 * s * s) * f.values[i];
    }
    return g;
}

double riccati_beta(const MassProfile& p, double x) {
    const double c = p.ordering_a + 0.25;
    const double m = massmap::mass(p, x);
    return massmap::bijection_s(p, x) -
           c * massmap::mass_d1(p, x) / (m * std::sqrt(m));
}

double riccati_residual(const MassProfile& p, double x) {
    const double c = p.ordering_a + 0.25;
    const double m = massmap::mass(p, x);
    const double m1 = massmap::mass_d1(p, x);
    const double m2 = massmap::mass_d2(p, x);
    const double s = massmap::bijection_s(p, x);
    const double beta = riccati_beta(p, x);
    const double beta1 =
        massmap::jacobian(p, x) -
        c * (m2 / (m * std::sqrt(m)) - 1.5 * m1 * m1 / (m * m * std::sqrt(m)));
    const double rhs =
        (2.0 * c * (m1 / m) * beta - beta1) / std::sqrt(m) + beta * beta;
    return s * s - 1.0 - rhs;
}

verify::VerificationReport partner_shift_check(const PdmSystem& sys) {
    const MassProfile& p = sys.profile;
    // -[A,B] = 2(a+1/4)[m m'' - (3/2) m'^2]/m^3 + 2 beta'/sqrt(m), expected 2.
    const double c = p.ordering_a + 0.25;
    double worst = 0.0;
    const double ylo = std::max(-2.0, massmap::bijection_s(
                                          p, x_lower(sys) == -std::numeric_limits<double>::infinity()
                                                 ? -2.0 / std::abs(p.lambda)
                                                 : x_lower(sys) + 1e-3));
    for (int i = 0; i <= 100; ++i) {
        const double y = ylo + (4.0 - ylo) * i / 100.0;
        const double x = massmap::inverse_s(p, y);
        const double m = massmap::mass(p, x);
        const double m1 = massmap::mass_d1(p, x);
        const double m2 = massmap::mass_d2(p, x);
        const double beta1 =
            massmap::jacobian(p, x) -
            c * (m2 / (m * std::sqrt(m)) -
                 1.5 * m1 * m1 / (m * m * std::sqrt(m)));
        const double shift = 2.0 * c * (m * m2 - 1.5 * m1 * m1) / (m * m * m) +
                             2.0 * beta1 / std::sqrt(m);
        worst = std::max(worst, std::abs(shift - 2.0));
    }
    return verify::make_report(
        "partner_shift", worst, 1e-9,
        {{"profile", massmap::describe(p)}});
}

std::vector<bool> residual_mask(const PdmSystem& sys, const GridFunction& f) {
    auto mask = verify::edge_mask(f.size(), 3);
    const double h = f.dx;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!mask[i]) continue;
        const double x = f.x(i);
        const double j = massmap::jacobian(sys.profile, x);
        double scale = 1.0;
        if (sys.params) {
            const double y = massmap::bijection_s(sys.profile, x);
            scale = std::min(1.0, y);
        }
        // 16 points per feature with a 4x margin for the nested stencils.
        if (64.0 * j * h > scale) mask[i] = false;
    }
    return mask;
}

}  // namespace pdmosc::xspace
