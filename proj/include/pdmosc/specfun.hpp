#pragma once

namespace pdmosc::specfun {

/// Gamma function on the real axis away from the poles at 0, -1, -2, ...
/// Relative error below 1e-12 on [0.5, 50].
double gamma(double x);

/// log(Gamma(x)) for x > 0.
double log_gamma(double x);

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
double pochhammer(double a, int n);

/// Generalized Laguerre polynomial L_n^(alpha)(x), alpha > -1, x >= 0,
/// by the three-term recurrence
///   L_{k+1} = ((2k+1+alpha-x) L_k - (k+alpha) L_{k-1}) / (k+1).
double laguerre(int n, double alpha, double x);

/// Confluent hypergeometric function 1F1(a, c, x).
/// Terminating cases (a a non-positive integer) are summed exactly as an
/// (n+1)-term polynomial; otherwise the power series is used and x <= 30
/// is required.
double kummer_1f1(double a, double c, double x);

/// Modified Bessel function of the first kind I_nu(x), nu > -1,
/// 0 <= x <= 60 (power series regime).
double bessel_i(double nu, double x);

/// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

/// Odd Hermite polynomial H_{2n+1}(x).
double hermite_odd(int n, double x);

}  // namespace pdmosc::specfun
