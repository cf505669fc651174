#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tanrep {

inline constexpr double kDefaultEpsilon = 0.05;
inline constexpr double kDefaultTolK = 1e-6;
inline constexpr double kTauCap = 0.25;

// One admissible window: log y runs over [pi k + pi/4, pi k + arctan 2], so
// tan(log y) stays in [1, 2] for every y in [delta1, delta2].
struct WindowParams {
    double c = 0.0;
    double theta = 0.0;
    std::int64_t k = 0;
    double delta1 = 0.0;
    double delta2 = 0.0;
    double x = 0.0;            // canonical X, equal to delta2
    std::int64_t n_star = 0;   // nearest integer to 2^theta * delta2^c, or the caller's N
    double n1 = 0.0;           // delta1^c
    double epsilon = kDefaultEpsilon;
    double tau = 0.0;          // min(X^(1-c-epsilon), 1/4)
    double residual = 0.0;     // |k_real - k| when built from a target, else 0
    std::vector<std::string> warnings;
};

WindowParams window_from_index(std::int64_t k, double c, double theta,
                               double epsilon = kDefaultEpsilon);

// Target-first mode. Throws NoExactWindow when the closed-form index for N
// is further than tol_k from an integer.
WindowParams solve_for_target(std::int64_t n, double c, double theta,
                              double epsilon = kDefaultEpsilon, double tol_k = kDefaultTolK);

// Real-valued window index ((1/c) log(N / 2^theta) - arctan 2) / pi.
double window_index_real(std::int64_t n, double c, double theta);

// t(y) = y^c tan^theta(log y); throws OutOfWindow outside [delta1, delta2].
double forward_t(double y, const WindowParams& w);

// dt/dy on the window (no range check).
double forward_t_derivative(double y, const WindowParams& w);

// Image interval of t over the window, widened by 1/2 on each side so that
// the integer-rounded top target n_star is admissible.
struct TRange {
    double lo;
    double hi;
};
TRange t_domain(const WindowParams& w);

// Inverse of forward_t by bracketed Newton with bisection fallback.
double invert_y(double t, const WindowParams& w);

// dy/dt at t = m, i.e. the Theta(alpha) coefficient of e(m alpha).
double weight_w(double m, const WindowParams& w);

}  // namespace tanrep
