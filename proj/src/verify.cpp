#include "pdmosc/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "pdmosc/errors.hpp"

namespace pdmosc {

GridFunction sample(double x0, double dx, std::size_t n,
                    const std::function<double(double)>& f) {
    GridFunction g;
    g.x0 = x0;
    g.dx = dx;
    g.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.values[i] = f(g.x(i));
    return g;
}

}  // namespace pdmosc

namespace pdmosc::verify {

VerificationReport make_report(
    std::string check_id, double residual, double tolerance,
    std::vector<std::pair<std::string, std::string>> context) {
    VerificationReport r;
    r.check_id = std::move(check_id);
    r.residual = residual;
    r.tolerance = tolerance;
    r.passed = residual <= tolerance;
    r.context = std::move(context);
    return r;
}

std::string format_report_line(const VerificationReport& r) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), ",%.16e,%.16e,%s", r.residual, r.tolerance,
                  r.passed ? "true" : "false");
    return r.check_id + buf;
}

namespace {

struct Stencil {
    int first_offset;
    std::vector<double> weights;  // divided by h^order by the caller
};

// 4th-order first-derivative rows (numerators over 12 h).
const Stencil kD1Rows[5] = {
    {0, {-25, 48, -36, 16, -3}},
    {-1, {-3, -10, 18, -6, 1}},
    {-2, {1, -8, 0, 8, -1}},
    {-3, {-1, 6, -18, 10, 3}},
    {-4, {3, -16, 36, -48, 25}},
};

// 4th-order second-derivative rows (numerators over 12 h^2).
const Stencil kD2Rows[5] = {
    {0, {45, -154, 214, -156, 61, -10}},
    {-1, {10, -15, -4, 14, -6, 1}},
    {-2, {-1, 16, -30, 16, -1}},
    {-4, {1, -6, 14, -4, -15, 10}},
    {-5, {-10, 61, -156, 214, -154, 45}},
};

}  // namespace

GridFunction derivative(const GridFunction& f, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("derivative: order must be 1 or 2");
    const std::size_t n = f.size();
    if (n < 7) throw std::invalid_argument("derivative: need at least 7 points");
    const double h = f.dx;
    if (!(h > 0.0)) throw std::invalid_argument("derivative: invalid spacing");
    const double scale =
        (order == 1) ? 1.0 / (12.0 * h) : 1.0 / (12.0 * h * h);
    const Stencil* rows = (order == 1) ? kD1Rows : kD2Rows;

    GridFunction out = f;
    for (std::size_t i = 0; i < n; ++i) {
        int which = 2;
        if (i == 0)
            which = 0;
        else if (i == 1)
            which = 1;
        else if (i == n - 2)
            which = 3;
        else if (i == n - 1)
            which = 4;
        const Stencil& st = rows[which];
        double acc = 0.0;
        for (std::size_t k = 0; k < st.weights.size(); ++k) {
            const std::size_t j = i + st.first_offset + static_cast<int>(k);
            acc += st.weights[k] * f.values[j];
        }
        out.values[i] = acc * scale;
    }
    return out;
}

namespace {

// Gauss-Kronrod (7,15) nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

template <typename T>
double magnitude(T v) {
    return std::abs(v);
}

template <typename T>
struct PanelResult {
    T kronrod{};
    double err = 0.0;
};

template <typename T>
PanelResult<T> gk15(const std::function<T(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    T fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - hw * kXgk[i]);
        fv[14 - i] = f(c + hw * kXgk[i]);
    }
    fv[7] = f(c);
    T k{};
    for (int i = 0; i < 7; ++i) k += kWgk[i] * (fv[i] + fv[14 - i]);
    k += kWgk[7] * fv[7];
    T g{};
    // Gauss nodes sit at the odd Kronrod indices 1, 3, 5 and the centre.
    for (int i = 0; i < 3; ++i) g += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    g += kWg[3] * fv[7];
    PanelResult<T> out;
    out.kronrod = k * hw;
    out.err = magnitude(T(k - g)) * std::abs(hw);
    return out;
}

template <typename T>
T adaptive(const std::function<T(double)>& f, double a, double b, double tol,
           int depth, bool& converged) {
    const auto p = gk15(f, a, b);
    if (p.err <= tol || depth >= 52 ||
        std::abs(b - a) <= 1e-15 * (std::abs(a) + std::abs(b) + 1.0)) {
        if (p.err > tol && depth >= 52) converged = false;
        return p.kronrod;
    }
    const double c = 0.5 * (a + b);
    return adaptive(f, a, c, 0.5 * tol, depth + 1, converged) +
           adaptive(f, c, b, 0.5 * tol, depth + 1, converged);
}

template <typename T>
T integrate_impl(const std::function<T(double)>& f, double a, double b,
                 double abs_tol) {
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("integrate: tolerance must be positive");
    if (a == b) return T{};
    bool converged = true;
    T v = adaptive(f, a, b, abs_tol, 0, converged);
    if (!converged)
        throw accuracy_error("integrate: refinement did not converge");
    return v;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
    return integrate_impl<double>(f, a, b, abs_tol);
}

std::complex<double> integrate(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol) {
    return integrate_impl<std::complex<double>>(f, a, b, abs_tol);
}

double integrate_rel(const std::function<double(double)>& f, double a,
                     double b, double rel_tol) {
    bool ok = true;
    const double rough = std::abs(adaptive<double>(f, a, b, 1.0, 48, ok));
    const double tol = std::max(rel_tol * (rough + 1e-300), 1e-300);
    return integrate_impl<double>(f, a, b, tol);
}

std::complex<double> inner_product(
    const std::function<std::complex<double>(double)>& f,
    const std::function<std::complex<double>(double)>& g, double a, double b,
    double abs_tol) {
    return integrate(
        [&](double x) { return std::conj(f(x)) * g(x); }, a, b, abs_tol);
}

double inner_product(const std::function<double(double)>& f,
                     const std::function<double(double)>& g, double a,
                     double b, double abs_tol) {
    return integrate([&](double x) { return f(x) * g(x); }, a, b, abs_tol);
}

double inner_product(const GridFunction& f, const GridFunction& g) {
    if (f.size() != g.size() || f.x0 != g.x0 || f.dx != g.dx)
        throw std::invalid_argument("inner_product: grids do not match");
    const std::size_t n = f.size();
    if (n < 4) throw std::invalid_argument("inner_product: grid too small");
    auto fg = [&](std::size_t i) { return f.values[i] * g.values[i]; };
    // Composite Simpson; a 3/8 tail handles an odd interval count.
    std::size_t m = n - 1;
    double acc = 0.0;
    std::size_t last = m;
    if (m % 2 != 0) {
        last = m - 3;
        acc += 3.0 * f.dx / 8.0 *
               (fg(last) + 3.0 * fg(last + 1) + 3.0 * fg(last + 2) + fg(m));
    }
    double s = fg(0) + fg(last);
    for (std::size_t i = 1; i < last; i += 2) s += 4.0 * fg(i);
    for (std::size_t i = 2; i < last; i += 2) s += 2.0 * fg(i);
    acc += s * f.dx / 3.0;
    return acc;
}

std::vector<bool> edge_mask(std::size_t n, std::size_t strip) {
    std::vector<bool> m(n, true);
    for (std::size_t i = 0; i < n; ++i)
        if (i < strip || i + strip >= n) m[i] = false;
    return m;
}

double masked_l2_ratio(const GridFunction& num, const GridFunction& den,
                       const std::vector<bool>& include) {
    if (num.size() != den.size() || include.size() != num.size())
        throw std::invalid_argument("masked_l2_ratio: size mismatch");
    double sn = 0.0, sd = 0.0;
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (!include[i]) continue;
        sn += num.values[i] * num.values[i];
        sd += den.values[i] * den.values[i];
    }
    if (sd == 0.0)
        return sn == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::sqrt(sn / sd);
}

double masked_sup_ratio(const GridFunction& num, const GridFunction& den,
                        const std::vector<bool>& include) {
    if (num.size() != den.size() || include.size() != num.size())
        throw std::invalid_argument("masked_sup_ratio: size mismatch");
    double mn = 0.0, md = 0.0;
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (!include[i]) continue;
        mn = std::max(mn, std::abs(num.values[i]));
        md = std::max(md, std::abs(den.values[i]));
    }
    return mn / (1.0 + md);
}

}  // namespace pdmosc::verify
