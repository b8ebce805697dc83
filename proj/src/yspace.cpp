#include "pdmosc/yspace.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "pdmosc/specfun.hpp"
#include "pdmosc/verify.hpp"

namespace pdmosc::yspace {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

}  // namespace

SingularParams params_from_g0(double g0) {
    if (!(g0 > -0.5))
        throw std::domain_error(
            "params_from_g0: no infinite point spectrum for g0 <= -1/2");
    SingularParams p;
    p.g0 = g0;
    p.alpha = 0.5 + std::sqrt(0.25 + 0.5 * g0);
    p.kappa = 0.5 * (0.5 + p.alpha);
    return p;
}

double energy(const SingularParams& p, int n) {
    if (n < 0) throw std::invalid_argument("energy: n must be >= 0");
    return 4.0 * n + 2.0 + std::sqrt(1.0 + 2.0 * p.g0);
}

double hermite_normalization(int n) {
    if (n < 0) throw std::invalid_argument("hermite_normalization: n >= 0");
    static std::vector<double> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(cache.size()) <= n) {
        const int k = static_cast<int>(cache.size());
        const double ymax = std::sqrt(4.0 * k + 3.0) + 9.0;
        const double norm2 = verify::integrate_rel(
            [k](double y) {
                const double h = specfun::hermite_odd(k, y);
                return std::exp(-y * y) * h * h;
            },
            0.0, ymax, 1e-13);
        cache.push_back(1.0 / std::sqrt(norm2));
    }
    return cache[n];
}

double phi_n(const SingularParams& p, int n, double y) {
    if (n < 0) throw std::invalid_argument("phi_n: n must be >= 0");
    if (y <= 0.0) throw std::domain_error("phi_n: defined on y > 0");
    if (p.g0 == 0.0) {
        // Odd-oscillator branch; sign fixed positive near the origin.
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        return sign * hermite_normalization(n) * std::exp(-0.5 * y * y) *
               specfun::hermite_odd(n, y);
    }
    const double a = p.alpha;
    const double norm =
        std::sqrt(2.0) *
        std::exp(0.5 * (specfun::log_gamma(n + 1.0) -
                        specfun::log_gamma(a + n + 0.5)));
    return norm * std::pow(y, a) * std::exp(-0.5 * y * y) *
           specfun::laguerre(n, a - 0.5, y * y);
}

double phi_cutoff(const SingularParams& p, int n) {
    double y = std::sqrt(energy(p, n)) + 2.0;
    while (std::abs(phi_n(p, n, y)) > 1e-12 && y < 60.0) y += 0.5;
    return y + 0.5;
}

double kummer_phi(const SingularParams& p, double E, double l1, double l2,
                  double y) {
    if (y <= 0.0) throw std::domain_error("kummer_phi: defined on y > 0");
    const double alpha = p.alpha;
    const double a = 0.25 * (2.0 * alpha + 1.0 - E);
    const double c = 0.5 * (2.0 * alpha + 1.0);
    const double at = 0.25 * (3.0 - 2.0 * alpha - E);
    const double ct = 0.5 * (3.0 - 2.0 * alpha);
    if (is_nonpositive_integer(c) || is_nonpositive_integer(ct))
        throw std::domain_error("kummer_phi: degenerate Kummer parameter");
    const double gauss = std::exp(-0.5 * y * y);
    double v = 0.0;
    if (l1 != 0.0)
        v += l1 * std::pow(y, alpha) * gauss * specfun::kummer_1f1(a, c, y * y);
    if (l2 != 0.0)
        v += l2 * std::pow(y, 1.0 - alpha) * gauss *
             specfun::kummer_1f1(at, ct, y * y);
    return v;
}

double gamma_plus(const SingularParams& p, int n) {
    if (n < 0) throw std::invalid_argument("gamma_plus: n must be >= 0");
    return 4.0 * std::sqrt((n + 1.0) * (n + 2.0 * p.kappa));
}

double gamma_minus(const SingularParams& p, int n) {
    if (n < 0) throw std::invalid_argument("gamma_minus: n must be >= 0");
    return 4.0 * std::sqrt(n * (n - 1.0 + 2.0 * p.kappa));
}

double casimir_value(const SingularParams& p) {
    return 3.0 / 16.0 - p.g0 / 8.0;
}

FockVector apply_ladder(const FockVector& v, Ladder direction) {
    FockVector out = v;
    const std::size_t n = v.coeffs.size();
    auto coeff = [&](Ladder dir, int k) {
        return v.basis == BasisKind::Linear
                   ? linear_ladder_coeff(dir, k)
                   : (dir == Ladder::Raise ? gamma_plus(v.params, k)
                                           : gamma_minus(v.params, k));
    };
    if (direction == Ladder::Raise) {
        out.coeffs.assign(n + 1, {0.0, 0.0});
        for (std::size_t k = 0; k < n; ++k)
            out.coeffs[k + 1] = coeff(Ladder::Raise, static_cast<int>(k)) *
                                v.coeffs[k];
    } else {
        if (n <= 1) {
            out.coeffs.assign(1, {0.0, 0.0});
            return out;
        }
        out.coeffs.assign(n - 1, {0.0, 0.0});
        for (std::size_t k = 1; k < n; ++k)
            out.coeffs[k - 1] = coeff(Ladder::Lower, static_cast<int>(k)) *
                                v.coeffs[k];
    }
    return out;
}

double linear_phi(int k, double y) {
    if (k < 0) throw std::invalid_argument("linear_phi: k must be >= 0");
    const double norm =
        std::exp(-0.5 * (k * std::log(2.0) + specfun::log_gamma(k + 1.0))) *
        std::pow(kPi, -0.25);
    return norm * specfun::hermite(k, y) * std::exp(-0.5 * y * y);
}

double linear_cutoff(int k) {
    double y = std::sqrt(2.0 * k + 1.0) + 2.0;
    while (std::abs(linear_phi(k, y)) > 1e-12 && y < 60.0) y += 0.5;
    return y + 0.5;
}

double linear_ladder_coeff(Ladder direction, int k) {
    if (k < 0) throw std::invalid_argument("linear_ladder_coeff: k >= 0");
    return direction == Ladder::Raise ? std::sqrt(2.0 * (k + 1.0))
                                      : std::sqrt(2.0 * k);
}

}  // namespace pdmosc::yspace
