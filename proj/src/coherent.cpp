#include "pdmosc/coherent.hpp"

#include <cmath>
#include <stdexcept>

#include "pdmosc/errors.hpp"
#include "pdmosc/specfun.hpp"

namespace pdmosc::coherent {

namespace {

using cplx = std::complex<double>;

// |c_{k+1} / c_k| for each family.
double step_ratio(Kind kind, double zmag, double kappa, int k) {
    switch (kind) {
        case Kind::Glauber:
            return zmag / std::sqrt(2.0 * (k + 1.0));
        case Kind::BarutGirardello:
            return 0.25 * zmag /
                   std::sqrt((k + 1.0) * (k + 2.0 * kappa));
        case Kind::Perelomov:
            return 4.0 * zmag * std::sqrt((k + 2.0 * kappa) / (k + 1.0));
    }
    return 0.0;
}

cplx step_factor(Kind kind, cplx z, double kappa, int k) {
    switch (kind) {
        case Kind::Glauber:
            return z / std::sqrt(2.0 * (k + 1.0));
        case Kind::BarutGirardello:
            return 0.25 * z / std::sqrt((k + 1.0) * (k + 2.0 * kappa));
        case Kind::Perelomov:
            return 4.0 * z * std::sqrt((k + 2.0 * kappa) / (k + 1.0));
    }
    return {};
}

}  // namespace

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Glauber: return "glauber";
        case Kind::BarutGirardello: return "barut-girardello";
        case Kind::Perelomov: return "perelomov";
    }
    return "?";
}

CoherentState build(Kind kind, const xspace::PdmSystem& system, cplx z,
                    double tolerance) {
    if (!(tolerance > 0.0 && tolerance < 1.0))
        throw std::invalid_argument("build: tolerance must lie in (0, 1)");
    const bool linear = system.id == xspace::PotentialId::LinearPdm;
    if (kind == Kind::Glauber && !linear)
        throw std::invalid_argument(
            "build: Glauber states attach to linear systems");
    if (kind != Kind::Glauber && linear)
        throw std::invalid_argument(
            "build: su(1,1) states attach to singular systems");
    const double kappa = linear ? 0.0 : system.params->kappa;
    const double zmag = std::abs(z);
    if (kind == Kind::Perelomov && !(4.0 * zmag < 1.0))
        throw std::domain_error("build: Perelomov states require |4z| < 1");

    CoherentState cs;
    cs.kind = kind;
    cs.z = z;
    cs.system = system;

    // Leading coefficient of the normalized series.
    double c0 = 1.0;
    switch (kind) {
        case Kind::Glauber:
            c0 = std::exp(-0.25 * zmag * zmag);
            break;
        case Kind::BarutGirardello: {
            if (zmag == 0.0) break;
            const double nu = 2.0 * kappa - 1.0;
            c0 = std::pow(0.25 * zmag, kappa - 0.5) /
                 std::sqrt(specfun::bessel_i(nu, 0.5 * zmag) *
                           specfun::gamma(2.0 * kappa));
            break;
        }
        case Kind::Perelomov: {
            const double w = 4.0 * zmag;
            c0 = std::pow(1.0 - w * w, kappa);
            break;
        }
    }

    if (zmag == 0.0) {
        cs.coeffs = {cplx(c0, 0.0)};
        cs.truncation_n = 0;
        cs.tail_bound = 0.0;
        return cs;
    }

    int first_shrinking = 0;
    while (step_ratio(kind, zmag, kappa, first_shrinking) >= 1.0 &&
           first_shrinking < 100000)
        ++first_shrinking;
    int n = std::max(8, 2 * first_shrinking);

    for (;;) {
        if (n > 200000) throw accuracy_error("build: truncation did not close");
        const double rho = step_ratio(kind, zmag, kappa, n);
        if (rho >= 0.999) {
            n *= 2;
            continue;
        }
        // |c_n| from the recurrence in magnitude only.
        double mag = c0;
        for (int k = 0; k < n; ++k) mag *= step_ratio(kind, zmag, kappa, k);
        const double rho_sup =
            kind == Kind::Perelomov ? std::max(rho, 4.0 * zmag) : rho;
        const double tail = mag * rho_sup / std::sqrt(1.0 - rho_sup * rho_sup);
        if (tail >= tolerance) {
            n += std::max(8, n / 2);
            continue;
        }
        cs.tail_bound = tail;
        break;
    }

    cs.truncation_n = n;
    cs.coeffs.resize(n + 1);
    cs.coeffs[0] = cplx(c0, 0.0);
    for (int k = 0; k < n; ++k)
        cs.coeffs[k + 1] = cs.coeffs[k] * step_factor(kind, z, kappa, k);
    return cs;
}

double eigen_residual(const CoherentState& cs) {
    if (cs.kind == Kind::Perelomov)
        throw std::invalid_argument(
            "eigen_residual: Perelomov states are not lowering eigenstates");
    const bool linear = cs.kind == Kind::Glauber;
    const auto& c = cs.coeffs;
    double acc = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        cplx lowered{0.0, 0.0};
        if (k + 1 < c.size()) {
            const double g =
                linear ? yspace::linear_ladder_coeff(yspace::Ladder::Lower,
                                                     static_cast<int>(k) + 1)
                       : yspace::gamma_minus(*cs.system.params,
                                             static_cast<int>(k) + 1);
            lowered = g * c[k + 1];
        }
        acc += std::norm(lowered - cs.z * c[k]);
    }
    return std::sqrt(acc);
}

std::complex<double> evaluate(const CoherentState& cs, double x) {
    const auto& p = cs.system.profile;
    const bool linear = cs.kind == Kind::Glauber;
    if (!linear && !(x > xspace::x_lower(cs.system)))
        throw std::domain_error("evaluate: x outside the system domain");
    const double y = massmap::bijection_s(p, x);
    if (!linear && y <= 0.0)
        throw std::domain_error("evaluate: x outside the system domain");
    const double rootj = std::sqrt(massmap::jacobian(p, x));
    cplx acc{0.0, 0.0};
    for (std::size_t l = 0; l < cs.coeffs.size(); ++l) {
        const double phi =
            linear ? yspace::linear_phi(static_cast<int>(l), y)
                   : yspace::phi_n(*cs.system.params, static_cast<int>(l), y);
        acc += cs.coeffs[l] * phi;
    }
    return rootj * acc;
}

std::complex<double> overlap(const CoherentState& a, const CoherentState& b) {
    if (a.kind != b.kind || !xspace::same_system(a.system, b.system))
        throw std::invalid_argument("overlap: states must share kind and system");
    const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k)
        acc += std::conj(a.coeffs[k]) * b.coeffs[k];
    return acc;
}

namespace {

// exp(M) e0 by scaling and squaring with a Taylor series; dim <= a few
// hundred is plenty here.
std::vector<cplx> expm_column0(std::vector<cplx> m, int dim) {
    auto at = [dim](std::vector<cplx>& mat, int i, int j) -> cplx& {
        return mat[static_cast<std::size_t>(i) * dim + j];
    };
    double norm1 = 0.0;
    for (int j = 0; j < dim; ++j) {
        double col = 0.0;
        for (int i = 0; i < dim; ++i) col += std::abs(at(m, i, j));
        norm1 = std::max(norm1, col);
    }
    int squarings = 0;
    if (norm1 > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
        const double scale = std::ldexp(1.0, -squarings);
        for (auto& v : m) v *= scale;
    }

    std::vector<cplx> e(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
    std::vector<cplx> term = e;
    for (int i = 0; i < dim; ++i) at(e, i, i) = at(term, i, i) = 1.0;
    std::vector<cplx> next(e.size());
    for (int k = 1; k <= 30; ++k) {
        // term <- term * m / k
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                cplx acc{0.0, 0.0};
                for (int l = 0; l < dim; ++l)
                    acc += at(term, i, l) * at(m, l, j);
                at(next, i, j) = acc / static_cast<double>(k);
            }
        term.swap(next);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += term[i];
    }
    for (int s = 0; s < squarings; ++s) {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                cplx acc{0.0, 0.0};
                for (int l = 0; l < dim; ++l) acc += at(e, i, l) * at(e, l, j);
                at(next, i, j) = acc;
            }
        e.swap(next);
    }
    std::vector<cplx> col(dim);
    for (int i = 0; i < dim; ++i) col[i] = at(e, i, 0);
    return col;
}

}  // namespace

double displacement_check(const xspace::PdmSystem& system, cplx z, int dim) {
    if (dim < 2) throw std::invalid_argument("displacement_check: dim >= 2");
    std::vector<cplx> m(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
    for (int k = 0; k + 1 < dim; ++k) {
        const double up = yspace::linear_ladder_coeff(yspace::Ladder::Raise, k);
        const double dn =
            yspace::linear_ladder_coeff(yspace::Ladder::Lower, k + 1);
        m[static_cast<std::size_t>(k + 1) * dim + k] = 0.5 * z * up;
        m[static_cast<std::size_t>(k) * dim + (k + 1)] =
            -0.5 * std::conj(z) * dn;
    }
    const auto displaced = expm_column0(std::move(m), dim);

    const CoherentState cs = build(Kind::Glauber, system, z, 1e-13);
    const std::size_t n = std::max<std::size_t>(dim, cs.coeffs.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx a = k < displaced.size() ? displaced[k] : cplx{0.0, 0.0};
        const cplx b = k < cs.coeffs.size() ? cs.coeffs[k] : cplx{0.0, 0.0};
        acc += std::norm(a - b);
    }
    return std::sqrt(acc);
}

double perelomov_norm_check(const yspace::SingularParams& params, cplx z) {
    const double w = 16.0 * std::norm(z);  // |4z|^2
    if (!(w < 1.0))
        throw std::domain_error("perelomov_norm_check: requires |4z| < 1");
    const double two_kappa = 2.0 * params.kappa;
    double term = 1.0;
    double sum = 1.0;
    for (int l = 0; l < 2000000; ++l) {
        term *= w * (l + two_kappa) / (l + 1.0);
        sum += term;
        const double r = w * (l + 1.0 + two_kappa) / (l + 2.0);
        const double rho = std::max(r, w);
        if (rho < 1.0 && term * rho / (1.0 - rho) <= 1e-14 * sum) break;
    }
    return std::abs(sum * std::pow(1.0 - w, two_kappa) - 1.0);
}

double uncertainty_product(const CoherentState& cs) {
    if (cs.kind != Kind::Glauber ||
        cs.system.profile.kind != massmap::Kind::ConstantMass)
        throw std::invalid_argument(
            "uncertainty_product: constant-mass Glauber state required");
    const auto& c = cs.coeffs;
    const int n = static_cast<int>(c.size());
    auto theta = [&](double y) {
        cplx acc{0.0, 0.0};
        for (int k = 0; k < n; ++k) acc += c[k] * yspace::linear_phi(k, y);
        return acc;
    };
    // d/dy phi_k = (sqrt(2k) phi_{k-1} - sqrt(2k+2) phi_{k+1}) / 2.
    auto theta_prime = [&](double y) {
        cplx acc{0.0, 0.0};
        for (int k = 0; k < n; ++k) {
            double v = -std::sqrt(2.0 * k + 2.0) * yspace::linear_phi(k + 1, y);
            if (k > 0) v += std::sqrt(2.0 * k) * yspace::linear_phi(k - 1, y);
            acc += 0.5 * c[k] * v;
        }
        return acc;
    };
    const double span = yspace::linear_cutoff(n) + 2.0 * std::abs(cs.z) + 2.0;
    const double tol = 1e-11;
    const double norm = verify::integrate(
        [&](double y) { return std::norm(theta(y)); }, -span, span, tol);
    const double ey = verify::integrate(
        [&](double y) { return y * std::norm(theta(y)); }, -span, span, tol);
    const double eyy = verify::integrate(
        [&](double y) { return y * y * std::norm(theta(y)); }, -span, span,
        tol);
    const cplx ep_raw = verify::integrate(
        [&](double y) {
            return std::conj(theta(y)) * cplx{0.0, -1.0} * theta_prime(y);
        },
        -span, span, tol);
    const double epp = verify::integrate(
        [&](double y) { return std::norm(theta_prime(y)); }, -span, span, tol);
    const double ep = ep_raw.real();
    const double vy = eyy / norm - (ey / norm) * (ey / norm);
    const double vp = epp / norm - (ep / norm) * (ep / norm);
    return std::sqrt(vy * vp);
}

std::complex<double> squeeze_label_to_z(cplx xi) {
    const double mag = std::abs(xi);
    if (mag == 0.0) return {0.0, 0.0};
    return xi / mag * std::tanh(mag) * 0.25;
}

}  // namespace pdmosc::coherent
