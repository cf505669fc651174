#include "tanrep/window.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tanrep/errors.hpp"

namespace tanrep {

namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

constexpr double kMaxC = 23.0 / 21.0;
constexpr int kMaxIterations = 200;

void validate(double c, double theta, double epsilon) {
    if (!(c > 1.0)) throw Error(ErrorKind::InvalidParameter, "c must exceed 1");
    if (!(theta > 0.0)) throw Error(ErrorKind::InvalidParameter, "theta must be positive");
    if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidParameter, "epsilon must be positive");
}

// t(y) without the window check; invert_y probes slightly past the endpoints.
double raw_t(double y, double c, double theta) {
    return std::pow(y, c) * std::pow(std::tan(std::log(y)), theta);
}

}  // namespace

WindowParams window_from_index(std::int64_t k, double c, double theta, double epsilon) {
    if (k < 0) throw Error(ErrorKind::InvalidParameter, "window index k must be nonnegative");
    validate(c, theta, epsilon);

    WindowParams w;
    w.c = c;
    w.theta = theta;
    w.k = k;
    w.epsilon = epsilon;
    if (theta <= 1.0) w.warnings.emplace_back("theta <= 1 is outside the asymptotic range theta > 1");
    if (c >= kMaxC) w.warnings.emplace_back("c >= 23/21 lies outside the admissible range");

    const HighFloat pi = boost::math::constants::pi<HighFloat>();
    const HighFloat base = pi * k;
    const HighFloat d1 = exp(base + pi / 4);
    const HighFloat d2 = exp(base + atan(HighFloat(2)));
    const HighFloat top = pow(HighFloat(2), HighFloat(theta)) * pow(d2, HighFloat(c));

    w.delta1 = static_cast<double>(d1);
    w.delta2 = static_cast<double>(d2);
    w.x = w.delta2;
    w.n1 = static_cast<double>(pow(d1, HighFloat(c)));
    w.n_star = static_cast<std::int64_t>(round(top));

    const double tau = std::pow(w.x, 1.0 - c - epsilon);
    if (tau >= kTauCap) {
        std::ostringstream os;
        os << "tau = X^(1-c-eps) = " << tau << " clipped to 1/4";
        w.warnings.push_back(os.str());
        w.tau = kTauCap;
    } else {
        w.tau = tau;
    }
    return w;
}

double window_index_real(std::int64_t n, double c, double theta) {
    const HighFloat pi = boost::math::constants::pi<HighFloat>();
    const HighFloat val =
        (log(HighFloat(n) / pow(HighFloat(2), HighFloat(theta))) / HighFloat(c) - atan(HighFloat(2))) / pi;
    return static_cast<double>(val);
}

WindowParams solve_for_target(std::int64_t n, double c, double theta, double epsilon, double tol_k) {
    if (n < 2) throw Error(ErrorKind::InvalidParameter, "target N must be at least 2");
    if (!(tol_k > 0.0)) throw Error(ErrorKind::InvalidParameter, "tol_k must be positive");
    validate(c, theta, epsilon);

    const double k_real = window_index_real(n, c, theta);
    const double k_round = std::round(k_real);
    const double residual = std::abs(k_real - k_round);
    if (residual > tol_k || k_round < 0.0) {
        std::ostringstream os;
        os << "k_real = " << k_real << ", residual " << residual << " exceeds tol_k " << tol_k;
        if (k_round < 0.0) os << " (negative index)";
        throw Error(ErrorKind::NoExactWindow, os.str());
    }
    WindowParams w = window_from_index(static_cast<std::int64_t>(k_round), c, theta, epsilon);
    w.n_star = n;
    w.residual = residual;
    return w;
}

double forward_t(double y, const WindowParams& w) {
    if (!(y >= w.delta1 && y <= w.delta2)) {
        std::ostringstream os;
        os << "y = " << y << " outside [" << w.delta1 << ", " << w.delta2 << "]";
        throw Error(ErrorKind::OutOfWindow, os.str());
    }
    return raw_t(y, w.c, w.theta);
}

double forward_t_derivative(double y, const WindowParams& w) {
    const double tn = std::tan(std::log(y));
    const double sec2 = 1.0 + tn * tn;
    return std::pow(y, w.c - 1.0) * std::pow(tn, w.theta - 1.0) * (w.c * tn + w.theta * sec2);
}

TRange t_domain(const WindowParams& w) {
    return {raw_t(w.delta1, w.c, w.theta) - 0.5, raw_t(w.delta2, w.c, w.theta) + 0.5};
}

double invert_y(double t, const WindowParams& w) {
    const TRange dom = t_domain(w);
    if (!(t >= dom.lo && t <= dom.hi)) {
        std::ostringstream os;
        os << "t = " << t << " outside [" << dom.lo << ", " << dom.hi << "]";
        throw Error(ErrorKind::OutOfRange, os.str());
    }
    const double t_lo = raw_t(w.delta1, w.c, w.theta);
    const double t_hi = raw_t(w.delta2, w.c, w.theta);
    if (t == t_lo) return w.delta1;
    if (t == t_hi) return w.delta2;

    // Bracket; extend a little past an endpoint for the rounding slack.
    double lo = w.delta1;
    double hi = w.delta2;
    if (t < t_lo) lo = w.delta1 * (1.0 - 1e-3);
    if (t > t_hi) hi = w.delta2 * (1.0 + 1e-3);

    double y = lo + (hi - lo) * (t - t_lo) / (t_hi - t_lo);
    y = std::clamp(y, lo, hi);
    const double tol = 1e-12 * std::abs(t);
    for (int it = 0; it < kMaxIterations; ++it) {
        const double diff = raw_t(y, w.c, w.theta) - t;
        if (std::abs(diff) <= tol) return y;
        if (diff > 0.0)
            hi = y;
        else
            lo = y;
        double next = y - diff / forward_t_derivative(y, w);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == y || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) return next;
        y = next;
    }
    throw Error(ErrorKind::NoConvergence, "invert_y did not converge");
}

double weight_w(double m, const WindowParams& w) {
    const double y = invert_y(m, w);
    const double tn = std::tan(std::log(y));
    const double sec2 = 1.0 + tn * tn;
    return std::pow(y, 1.0 - w.c) / ((w.c * tn + w.theta * sec2) * std::pow(tn, w.theta - 1.0));
}

}  // namespace tanrep
