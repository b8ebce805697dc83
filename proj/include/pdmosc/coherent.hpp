#pragma once

#include <complex>
#include <vector>

#include "pdmosc/xspace.hpp"

namespace pdmosc::coherent {

enum class Kind { Glauber, BarutGirardello, Perelomov };

const char* kind_name(Kind k);

/// A coherent state as a finite coefficient vector over the eigenbasis of
/// its system (linear basis for Glauber, singular basis otherwise).
/// Coefficients depend only on (kind, z, g0); the mass profile enters only
/// through evaluate().
struct CoherentState {
    Kind kind = Kind::Glauber;
    std::complex<double> z;
    int truncation_n = 0;   ///< highest retained index
    double tail_bound = 0.0;  ///< norm contribution excluded by truncation
    std::vector<std::complex<double>> coeffs;
    xspace::PdmSystem system;
};

/// Coefficient sequences:
///   Glauber           c_k = e^{-|z|^2/4} z^k / sqrt(2^k k!)
///   Barut-Girardello  c_l = (|z|/4)^{kappa-1/2} I_{2kappa-1}(|z|/2)^{-1/2}
///                            (z/4)^l / sqrt(Gamma(l+1) Gamma(l+2kappa))
///   Perelomov         c_l = (1-|4z|^2)^kappa (4z)^l
///                            sqrt(Gamma(l+2kappa)/(Gamma(l+1) Gamma(2kappa)))
/// The truncation order comes from the ratio test of the series, doubled,
/// then extended until the analytic tail bound drops below `tolerance`.
CoherentState build(Kind kind, const xspace::PdmSystem& system,
                    std::complex<double> z, double tolerance = 1e-12);

/// || (ladder_minus - z) c ||_2 in coefficient space; only Glauber and
/// Barut-Girardello states are lowering-operator eigenstates.
double eigen_residual(const CoherentState& cs);

/// J^{1/2}(x) sum_l c_l phi_l(s(x)).
std::complex<double> evaluate(const CoherentState& cs, double x);

/// <cs1, cs2> in coefficient space (equals the x-space inner product).
std::complex<double> overlap(const CoherentState& cs1,
                             const CoherentState& cs2);

/// Distance between the built Glauber coefficients and the column
/// exp((z a+ - conj(z) a-)/2) e_0 of a dim-dimensional matrix exponential.
double displacement_check(const xspace::PdmSystem& system,
                          std::complex<double> z, int dim);

/// | sum_l |4z|^{2l} Gamma(l+2kappa)/(Gamma(l+1) Gamma(2kappa))
///     * (1-|4z|^2)^{2kappa} - 1 |.
double perelomov_norm_check(const yspace::SingularParams& params,
                            std::complex<double> z);

/// Delta-Y times Delta-P of a Glauber state on the constant-mass linear
/// system, computed by quadrature with P = -i d/dy.
double uncertainty_product(const CoherentState& cs);

/// 4z = (xi/|xi|) tanh |xi| conversion for the group-displacement label.
std::complex<double> squeeze_label_to_z(std::complex<double> xi);

}  // namespace pdmosc::coherent
