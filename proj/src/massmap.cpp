#include "pdmosc/massmap.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pdmosc::massmap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double require_u(const MassProfile& p, double x, bool strict) {
    const double u = p.x0 + p.lambda * x;
    if (u < 0.0 || (strict && u == 0.0))
        throw std::domain_error("massmap: x outside the profile domain");
    return u;
}

[[noreturn]] void bad_kind() {
    throw std::logic_error("massmap: unknown profile kind");
}

}  // namespace

MassProfile MassProfile::mdnt0(double x0, double lambda) {
    MassProfile p;
    p.kind = Kind::Mdnt0;
    p.x0 = x0;
    p.lambda = lambda;
    p.ordering_a = -0.25;
    p.x_min = lambda != 0.0 ? (1.0 - x0) / lambda : 0.0;
    return p;
}

MassProfile MassProfile::mdnt(int n, double x0, double lambda) {
    if (n < 1) throw std::invalid_argument("MassProfile::mdnt: n must be >= 1");
    MassProfile p;
    p.kind = Kind::MdntN;
    p.n = n;
    p.x0 = x0;
    p.lambda = lambda;
    p.ordering_a = (1.0 - n) / (4.0 * n);
    p.x_min = lambda != 0.0 ? -x0 / lambda : 0.0;
    return p;
}

MassProfile MassProfile::regular(double lambda) {
    MassProfile p;
    p.kind = Kind::Regular;
    p.lambda = lambda;
    p.ordering_a = -0.25;
    p.x_min = 0.0;
    return p;
}

MassProfile MassProfile::exponential(double x0, double lambda) {
    if (x0 < 0.0)
        throw std::invalid_argument("MassProfile::exponential: x0 must be >= 0");
    MassProfile p;
    p.kind = Kind::Exponential;
    p.x0 = x0;
    p.lambda = lambda;
    p.ordering_a = -0.25;
    if (lambda != 0.0)
        p.x_min = x0 > 0.0 ? std::log(x0) / lambda : -kInf;
    return p;
}

MassProfile MassProfile::constant_mass() {
    MassProfile p;
    p.kind = Kind::ConstantMass;
    p.ordering_a = -0.25;
    p.x_min = 0.0;
    return p;
}

bool operator==(const MassProfile& a, const MassProfile& b) {
    return a.kind == b.kind && a.n == b.n && a.x0 == b.x0 &&
           a.lambda == b.lambda && a.ordering_a == b.ordering_a &&
           a.x_min == b.x_min;
}

double mass(const MassProfile& p, double x) {
    switch (p.kind) {
        case Kind::Mdnt0: {
            const double u = require_u(p, x, true);
            return 1.0 / (u * u);
        }
        case Kind::MdntN: {
            const double u = require_u(p, x, true);
            return std::pow(u, -4.0 * p.n / (2.0 * p.n + 1.0));
        }
        case Kind::Regular: {
            const double w = p.lambda * x;
            return 1.0 / (1.0 + w * w);
        }
        case Kind::Exponential:
            return std::exp(2.0 * p.lambda * x);
        case Kind::ConstantMass:
            return 1.0;
    }
    bad_kind();
}

double mass_d1(const MassProfile& p, double x) {
    switch (p.kind) {
        case Kind::Mdnt0: {
            const double u = require_u(p, x, true);
            return -2.0 * p.lambda / (u * u * u);
        }
        case Kind::MdntN: {
            const double u = require_u(p, x, true);
            const double q = -4.0 * p.n / (2.0 * p.n + 1.0);
            return q * p.lambda * std::pow(u, q - 1.0);
        }
        case Kind::Regular: {
            const double w = p.lambda * x;
            const double d = 1.0 + w * w;
            return -2.0 * p.lambda * w / (d * d);
        }
        case Kind::Exponential:
            return 2.0 * p.lambda * std::exp(2.0 * p.lambda * x);
        case Kind::ConstantMass:
            return 0.0;
    }
    bad_kind();
}

double mass_d2(const MassProfile& p, double x) {
    switch (p.kind) {
        case Kind::Mdnt0: {
            const double u = require_u(p, x, true);
            return 6.0 * p.lambda * p.lambda / (u * u * u * u);
        }
        case Kind::MdntN: {
            const double u = require_u(p, x, true);
            const double q = -4.0 * p.n / (2.0 * p.n + 1.0);
            return q * (q - 1.0) * p.lambda * p.lambda * std::pow(u, q - 2.0);
        }
        case Kind::Regular: {
            const double w = p.lambda * x;
            const double d = 1.0 + w * w;
            return -2.0 * p.lambda * p.lambda * (1.0 - 3.0 * w * w) /
                   (d * d * d);
        }
        case Kind::Exponential:
            return 4.0 * p.lambda * p.lambda * std::exp(2.0 * p.lambda * x);
        case Kind::ConstantMass:
            return 0.0;
    }
    bad_kind();
}

double jacobian(const MassProfile& p, double x) {
    switch (p.kind) {
        case Kind::Mdnt0:
            return 1.0 / require_u(p, x, true);
        case Kind::MdntN: {
            const double u = require_u(p, x, true);
            return std::pow(u, -2.0 * p.n / (2.0 * p.n + 1.0));
        }
        case Kind::Regular: {
            const double w = p.lambda * x;
            return 1.0 / std::sqrt(1.0 + w * w);
        }
        case Kind::Exponential:
            return std::exp(p.lambda * x);
        case Kind::ConstantMass:
            return 1.0;
    }
    bad_kind();
}

double jacobian_d1(const MassProfile& p, double x) {
    switch (p.kind) {
        case Kind::Mdnt0: {
            const double u = require_u(p, x, true);
            return -p.lambda / (u * u);
        }
        case Kind::MdntN: {
            const double u = require_u(p, x, true);
            const double q = -2.0 * p.n / (2.0 * p.n + 1.0);
            return q * p.lambda * std::pow(u, q - 1.0);
        }
        case Kind::Regular: {
            const double w = p.lambda * x;
            return -p.lambda * w * std::pow(1.0 + w * w, -1.5);
        }
        case Kind::Exponential:
            return p.lambda * std::exp(p.lambda * x);
        case Kind::ConstantMass:
            return 0.0;
    }
    bad_kind();
}

double bijection_s(const MassProfile& p, double x) {
    switch (p.kind) {
        case Kind::Mdnt0:
            return std::log(require_u(p, x, true)) / p.lambda;
        case Kind::MdntN: {
            const double u = require_u(p, x, false);
            const double m = 2.0 * p.n + 1.0;
            return m * std::pow(u, 1.0 / m) / p.lambda;
        }
        case Kind::Regular:
            return std::asinh(p.lambda * x) / p.lambda;
        case Kind::Exponential:
            return (std::exp(p.lambda * x) - p.x0) / p.lambda;
        case Kind::ConstantMass:
            return x;
    }
    bad_kind();
}

double inverse_s(const MassProfile& p, double y) {
    switch (p.kind) {
        case Kind::Mdnt0:
            return (std::exp(p.lambda * y) - p.x0) / p.lambda;
        case Kind::MdntN: {
            if (p.lambda * y < 0.0)
                throw std::domain_error("inverse_s: y outside the image of s");
            const double m = 2.0 * p.n + 1.0;
            return (std::pow(p.lambda * y / m, m) - p.x0) / p.lambda;
        }
        case Kind::Regular:
            return std::sinh(p.lambda * y) / p.lambda;
        case Kind::Exponential: {
            const double u = p.x0 + p.lambda * y;
            if (u <= 0.0)
                throw std::domain_error("inverse_s: y outside the image of s");
            return std::log(u) / p.lambda;
        }
        case Kind::ConstantMass:
            return y;
    }
    bad_kind();
}

double lower_edge(const MassProfile& p) {
    switch (p.kind) {
        case Kind::Mdnt0:
        case Kind::MdntN:
            return p.lambda != 0.0 ? -p.x0 / p.lambda : -kInf;
        default:
            return -kInf;
    }
}

double mdnt_residual(const MassProfile& p, double x) {
    if (p.kind != Kind::MdntN)
        throw std::invalid_argument("mdnt_residual: profile is not MdntN");
    const double a = p.ordering_a;
    const double c1 = 0.25 + a;
    const double c2 = 1.0 / 16.0 - a * a - (0.5 + 2.0 * a);
    const double m = mass(p, x);
    const double m1 = mass_d1(p, x);
    const double m2 = mass_d2(p, x);
    return c1 * m * m2 + c2 * m1 * m1;
}

verify::VerificationReport validate(const MassProfile& p) {
    std::vector<std::pair<std::string, std::string>> ctx;
    ctx.emplace_back("profile", describe(p));
    double worst = 0.0;
    std::string detail;

    if (p.lambda == 0.0 && p.kind != Kind::ConstantMass) {
        ctx.emplace_back("detail", "degenerate Jacobian");
        auto r = verify::make_report("profile_validate", 1.0, 1e-10, ctx);
        return r;
    }

    // Sample window just inside the domain.
    const double lo = std::isinf(p.x_min) ? -40.0 / std::abs(p.lambda == 0.0 ? 1.0 : p.lambda)
                                          : p.x_min;
    const double span = 5.0;
    double prev_s = 0.0;
    bool have_prev = false;
    for (int i = 0; i <= 100; ++i) {
        const double x = lo + span * (i + 1) / 101.0;
        double j = 0.0, s = 0.0;
        try {
            j = jacobian(p, x);
            s = bijection_s(p, x);
        } catch (const std::domain_error&) {
            detail = "domain evaluation failure";
            worst = std::max(worst, 1.0);
            break;
        }
        if (!(j > 0.0)) {
            detail = "non-positive Jacobian";
            worst = std::max(worst, 1.0);
        }
        if (have_prev && !(s > prev_s)) {
            detail = "bijection not strictly increasing";
            worst = std::max(worst, 1.0);
        }
        prev_s = s;
        have_prev = true;
    }

    // s must vanish at the left endpoint of the singular domain.
    double s_at_min = 0.0;
    if (std::isinf(p.x_min)) {
        s_at_min = bijection_s(p, lo);
    } else {
        try {
            s_at_min = bijection_s(p, p.x_min);
        } catch (const std::domain_error&) {
            s_at_min = 1.0;
        }
    }
    if (std::abs(s_at_min) > worst) {
        worst = std::abs(s_at_min);
        if (worst > 1e-10) detail = "s(x_min) != 0";
    }

    if (!detail.empty()) ctx.emplace_back("detail", detail);
    return verify::make_report("profile_validate", worst, 1e-10, ctx);
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

MassProfile parse_profile(const std::string& record) {
    std::string kind;
    int n = 1;
    double x0 = std::numeric_limits<double>::quiet_NaN();
    double lambda = 1.0;

    std::stringstream ss(record);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("parse_profile: expected key=value: " +
                                        item);
        const std::string key = lower(item.substr(0, eq));
        const std::string val = item.substr(eq + 1);
        if (key == "kind")
            kind = lower(val);
        else if (key == "n")
            n = std::stoi(val);
        else if (key == "x0")
            x0 = std::stod(val);
        else if (key == "lambda")
            lambda = std::stod(val);
        else
            throw std::invalid_argument("parse_profile: unknown key: " + key);
    }

    if (kind == "mdnt0")
        return MassProfile::mdnt0(std::isnan(x0) ? 1.0 : x0, lambda);
    if (kind == "mdntn" || kind == "mdnt")
        return MassProfile::mdnt(n, std::isnan(x0) ? 0.0 : x0, lambda);
    if (kind == "regular") return MassProfile::regular(lambda);
    if (kind == "exponential" || kind == "exp")
        return MassProfile::exponential(std::isnan(x0) ? 1.0 : x0, lambda);
    if (kind == "constant" || kind == "constantmass")
        return MassProfile::constant_mass();
    throw std::invalid_argument("parse_profile: unknown kind: " + kind);
}

std::string describe(const MassProfile& p) {
    std::ostringstream os;
    switch (p.kind) {
        case Kind::Mdnt0:
            os << "mdnt0(x0=" << p.x0 << ",lambda=" << p.lambda << ")";
            break;
        case Kind::MdntN:
            os << "mdntn(n=" << p.n << ",x0=" << p.x0 << ",lambda=" << p.lambda
               << ")";
            break;
        case Kind::Regular:
            os << "regular(lambda=" << p.lambda << ")";
            break;
        case Kind::Exponential:
            os << "exponential(x0=" << p.x0 << ",lambda=" << p.lambda << ")";
            break;
        case Kind::ConstantMass:
            os << "constant";
            break;
    }
    return os.str();
}

}  // namespace pdmosc::massmap
