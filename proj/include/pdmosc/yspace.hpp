#pragma once

#include <complex>
#include <vector>

namespace pdmosc::yspace {

/// Coupling g0 > -1/2 with the derived singularity exponent alpha and the
/// representation index kappa:
///   alpha = 1/2 + sqrt(1/4 + g0/2),  kappa = (1/2)(1/2 + alpha),
///   alpha^2 - alpha - g0/2 = 0.
struct SingularParams {
    double g0 = 0.0;
    double alpha = 1.0;
    double kappa = 0.75;
};

SingularParams params_from_g0(double g0);

/// E_n = 4n + 2 + sqrt(1 + 2 g0) = 4 (kappa + n), in units of hbar*omega0/2.
double energy(const SingularParams& p, int n);

/// L2-normalized eigenfunction of -d^2/dy^2 + y^2 + g0/(2 y^2) on (0, inf).
/// For g0 = 0 the odd-Hermite branch is used, with a quadrature-backed
/// normalization and the sign fixed positive near the origin.
double phi_n(const SingularParams& p, int n, double y);

/// Smallest y beyond which |phi_n| stays below 1e-12.
double phi_cutoff(const SingularParams& p, int n);

/// General solution of the radial equation at energy E through the two
/// Kummer branches:
///   l1 y^alpha e^{-y^2/2} 1F1(a, c, y^2) + l2 y^{1-alpha} e^{-y^2/2} 1F1(at, ct, y^2)
/// with 4a = 2 alpha + 1 - E, 2c = 2 alpha + 1, 4at = 3 - 2 alpha - E,
/// 2ct = 3 - 2 alpha.
double kummer_phi(const SingularParams& p, double E, double l1, double l2,
                  double y);

/// Ladder normalizations: gamma+(n) = 4 sqrt((n+1)(n+2 kappa)),
/// gamma-(n) = 4 sqrt(n (n-1+2 kappa)); gamma-(0) = 0.
double gamma_plus(const SingularParams& p, int n);
double gamma_minus(const SingularParams& p, int n);

/// Casimir invariant 3/16 - g0/8 (= kappa (1 - kappa)).
double casimir_value(const SingularParams& p);

enum class BasisKind { Singular, Linear };
enum class Ladder { Raise, Lower };

/// Finite coefficient vector over the eigenbasis tagged by `basis`.
struct FockVector {
    BasisKind basis = BasisKind::Singular;
    SingularParams params;
    std::vector<std::complex<double>> coeffs;
};

/// Exact coefficient-space ladder action; lowering annihilates the n = 0
/// component.
FockVector apply_ladder(const FockVector& v, Ladder direction);

/// Eigenfunctions of the linear oscillator -d^2/dy^2 + y^2 (E = 2k + 1) and
/// their ladder normalizations a- : sqrt(2k), a+ : sqrt(2(k+1)).
double linear_phi(int k, double y);
double linear_cutoff(int k);
double linear_ladder_coeff(Ladder direction, int k);

/// Quadrature-backed normalization constant of the g0 = 0 branch,
/// 1 / sqrt(int_0^inf e^{-y^2} H_{2n+1}(y)^2 dy).
double hermite_normalization(int n);

}  // namespace pdmosc::yspace
