#pragma once

#include <string>

#include "pdmosc/verify.hpp"

namespace pdmosc::massmap {

enum class Kind { Mdnt0, MdntN, Regular, Exponential, ConstantMass };

/// A catalog mass profile m(x)/m0 together with its point bijection
/// y = s(x), Jacobian J = s' = sqrt(m/m0), kinetic ordering label a and the
/// left endpoint x_min of the singular-oscillator domain (s(x_min) = 0).
///
/// Catalog:
///   Mdnt0        m = (x0 + l x)^-2            s = ln(x0 + l x)/l
///   MdntN(n)     m = (x0 + l x)^(-4n/(2n+1))  s = (2n+1)(x0 + l x)^(1/(2n+1))/l
///   Regular      m = 1/(1 + (l x)^2)          s = arcsinh(l x)/l
///   Exponential  m = e^(2 l x)                s = (e^(l x) - x0)/l
///   ConstantMass m = 1                        s = x
struct MassProfile {
    Kind kind = Kind::ConstantMass;
    int n = 0;  ///< MdntN branch index, n >= 1
    double x0 = 0.0;
    double lambda = 1.0;
    double ordering_a = -0.25;
    double x_min = 0.0;  ///< -infinity for the x0 = 0 exponential limit

    static MassProfile mdnt0(double x0, double lambda);
    static MassProfile mdnt(int n, double x0, double lambda);
    static MassProfile regular(double lambda);
    static MassProfile exponential(double x0, double lambda);
    static MassProfile constant_mass();
};

bool operator==(const MassProfile& a, const MassProfile& b);

/// Dimensionless mass m(x)/m0 and its analytic x-derivatives.
double mass(const MassProfile& p, double x);
double mass_d1(const MassProfile& p, double x);
double mass_d2(const MassProfile& p, double x);

/// Jacobian J(x) = ds/dx and its analytic x-derivative.
double jacobian(const MassProfile& p, double x);
double jacobian_d1(const MassProfile& p, double x);

double bijection_s(const MassProfile& p, double x);
double inverse_s(const MassProfile& p, double y);

/// Infimum of the natural domain of m and s (-infinity when unbounded).
double lower_edge(const MassProfile& p);

/// c1 m m'' + c2 (m')^2 with c1 = 1/4 + a and c2 = 1/16 - a^2 - (1/2 + 2a),
/// evaluated with analytic derivatives; identically zero on MdntN profiles.
double mdnt_residual(const MassProfile& p, double x);

/// Checks lambda != 0, J > 0, strict monotonicity of s and s(x_min) = 0 on a
/// domain sample; violations are reported, not thrown.
verify::VerificationReport validate(const MassProfile& p);

/// Parses a plain-text record `kind=regular,n=1,x0=1,lambda=1`.
MassProfile parse_profile(const std::string& record);

std::string describe(const MassProfile& p);

}  // namespace pdmosc::massmap
