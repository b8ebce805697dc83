#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pdmosc/grid.hpp"

namespace pdmosc::verify {

/// Outcome of one named numerical check.
struct VerificationReport {
    std::string check_id;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::vector<std::pair<std::string, std::string>> context;
};

VerificationReport make_report(
    std::string check_id, double residual, double tolerance,
    std::vector<std::pair<std::string, std::string>> context = {});

/// `check_id,residual,tolerance,passed` with 17 significant digits.
std::string format_report_line(const VerificationReport& r);

/// First derivative (order 1) or second derivative (order 2) on a uniform
/// grid, 4th-order central stencils with one-sided 4th-order rows at the
/// edges. Requires at least 7 points.
GridFunction derivative(const GridFunction& f, int order);

/// Adaptive Gauss-Kronrod (7,15) quadrature to an absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);
std::complex<double> integrate(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol = 1e-12);

/// Quadrature to a relative tolerance (scale taken from a first pass).
double integrate_rel(const std::function<double(double)>& f, double a,
                     double b, double rel_tol = 1e-13);

/// <f, g> = integral of conj(f) g over [a, b].
std::complex<double> inner_product(
    const std::function<std::complex<double>(double)>& f,
    const std::function<std::complex<double>(double)>& g, double a, double b,
    double abs_tol = 1e-12);
double inner_product(const std::function<double(double)>& f,
                     const std::function<double(double)>& g, double a,
                     double b, double abs_tol = 1e-12);

/// Same-grid inner product by composite Simpson quadrature.
double inner_product(const GridFunction& f, const GridFunction& g);

/// Mask selecting all rows except `strip` rows at each boundary.
std::vector<bool> edge_mask(std::size_t n, std::size_t strip = 3);

/// || num ||_2 / || den ||_2 restricted to the included rows.
double masked_l2_ratio(const GridFunction& num, const GridFunction& den,
                       const std::vector<bool>& include);

/// sup |num| / (1 + sup |den|) restricted to the included rows.
double masked_sup_ratio(const GridFunction& num, const GridFunction& den,
                        const std::vector<bool>& include);

/// Configuration of the aggregated check suite.
struct SuiteConfig {
    std::vector<double> g0_values = {0.5, 2.0, 3.5};
    int n_max = 5;
    int gram_n_max = 8;
    std::size_t min_grid_points = 20001;
    std::vector<std::complex<double>> z_values = {
        {0.5, 0.0}, {2.0, 0.0}, {4.0, 3.0}};
    std::map<std::string, double> tolerance_overrides;
};

const std::vector<std::string>& all_check_ids();

/// Runs the selected checks and returns their reports in a deterministic
/// order. An unknown id is a usage error (std::invalid_argument). An empty
/// selection yields an empty list.
std::vector<VerificationReport> run_suite(const std::vector<std::string>& ids,
                                          const SuiteConfig& config = {});

}  // namespace pdmosc::verify
