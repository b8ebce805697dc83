#include "pdmosc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pdmosc/errors.hpp"

namespace pdmosc::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double z) {
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
    return a;
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double gamma(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("gamma: pole at non-positive integer");
    if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) *
           lanczos_sum(z);
}

double log_gamma(double x) {
    if (x <= 0.0) throw std::domain_error("log_gamma: requires x > 0");
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
           std::log(lanczos_sum(z));
}

double pochhammer(double a, int n) {
    if (n < 0) throw std::domain_error("pochhammer: n must be >= 0");
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + k;
    return p;
}

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw std::domain_error("laguerre: n must be >= 0");
    if (alpha <= -1.0) throw std::domain_error("laguerre: alpha must exceed -1");
    if (x < 0.0) throw std::domain_error("laguerre: x must be >= 0");
    if (n == 0) return 1.0;
    double lkm1 = 1.0;
    double lk = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double lkp1 =
            ((2.0 * k + 1.0 + alpha - x) * lk - (k + alpha) * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

double kummer_1f1(double a, double c, double x) {
    if (is_nonpositive_integer(c))
        throw std::domain_error("kummer_1f1: c at a non-positive integer");
    if (is_nonpositive_integer(a)) {
        // Terminating polynomial, summed largest terms first.
        const int n = static_cast<int>(-a);
        std::vector<double> terms;
        terms.reserve(n + 1);
        double t = 1.0;
        terms.push_back(t);
        for (int k = 0; k < n; ++k) {
            t *= (a + k) * x / ((c + k) * (k + 1.0));
            terms.push_back(t);
        }
        std::sort(terms.begin(), terms.end(),
                  [](double u, double v) { return std::abs(u) > std::abs(v); });
        double s = 0.0, comp = 0.0;
        for (double v : terms) {
            const double y = v - comp;
            const double u = s + y;
            comp = (u - s) - y;
            s = u;
        }
        return s;
    }
    if (x > 30.0)
        throw accuracy_error("kummer_1f1: argument outside the series regime");
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 2000; ++k) {
        term *= (a + k) * x / ((c + k) * (k + 1.0));
        sum += term;
        const double r =
            std::abs((a + k + 1.0) * x / ((c + k + 1.0) * (k + 2.0)));
        if (r < 0.5 && std::abs(term) * r / (1.0 - r) <= 1e-13 * std::abs(sum))
            return sum;
    }
    throw accuracy_error("kummer_1f1: series did not reach the requested tail");
}

double bessel_i(double nu, double x) {
    if (nu <= -1.0) throw std::domain_error("bessel_i: order must exceed -1");
    if (x < 0.0) throw std::domain_error("bessel_i: x must be >= 0");
    if (x > 60.0)
        throw accuracy_error("bessel_i: argument outside the series regime");
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw std::domain_error("bessel_i: divergent at 0 for negative order");
    }
    const double q = 0.25 * x * x;
    double term = std::exp(nu * std::log(0.5 * x) - log_gamma(nu + 1.0));
    double sum = term;
    for (int k = 0; k < 2000; ++k) {
        term *= q / ((k + 1.0) * (k + 1.0 + nu));
        sum += term;
        const double r = q / ((k + 2.0) * (k + 2.0 + nu));
        if (r < 0.5 && term * r / (1.0 - r) <= 1e-13 * sum) return sum;
    }
    throw accuracy_error("bessel_i: series did not reach the requested tail");
}

double hermite(int n, double x) {
    if (n < 0) throw std::domain_error("hermite: n must be >= 0");
    if (n == 0) return 1.0;
    double hkm1 = 1.0;
    double hk = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double hkp1 = 2.0 * x * hk - 2.0 * k * hkm1;
        hkm1 = hk;
        hk = hkp1;
    }
    return hk;
}

double hermite_odd(int n, double x) {
    if (n < 0) throw std::domain_error("hermite_odd: n must be >= 0");
    return hermite(2 * n + 1, x);
}

}  // namespace pdmosc::specfun
