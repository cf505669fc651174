#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tanrep/asymptotics.hpp"
#include "tanrep/seqeval.hpp"
#include "tanrep/window.hpp"

namespace tanrep {

using Complex = std::complex<double>;

// e(y) = exp(2 pi i y), with y reduced mod 1 first.
Complex unit_phase(double y);

enum class SumKind { S, Theta, A };
std::string_view to_string(SumKind kind) noexcept;

struct SumSample {
    double alpha = 0.0;
    Complex value;
    SumKind kind = SumKind::S;
};

// S(alpha) = sum_p e(alpha f(p)) log p.
Complex s_alpha(std::span<const ValueEntry> values, std::span<const double> logs, double alpha);

// Theta(alpha) = sum_m weight_w(m) e(m alpha) over (N1, n_star].
Complex theta_alpha(const ThetaTable& table, double alpha);
Complex theta_alpha(const WindowParams& w, double alpha);

// f(n) over every integer n in (delta1, delta2].
ValueTable integer_value_table(const WindowParams& w, std::size_t threads = 0);

// A(alpha) = sum_n e(alpha f(n)) over all integers in the window.
Complex a_alpha(std::span<const ValueEntry> integers, double alpha);
Complex a_alpha(const WindowParams& w, double alpha);

struct CircleResult {
    Complex value;
    std::vector<std::string> warnings;
};

// Trapezoid rule with M panels for the integral of S^3(alpha) e(-N alpha)
// over [a, b]. Over a full period the rule is a uniform M-point sum, which
// is exact when M exceeds the spread of the frequencies 3 f(p) - N.
CircleResult circle_integral(std::span<const ValueEntry> values, std::span<const double> logs,
                             std::int64_t n, double a, double b, std::int64_t grid,
                             std::size_t threads = 0);

Complex fourier_coeff_ch(double x, std::int64_t h);

struct BurievStats {
    double max_residual = 0.0;
    double mean_residual = 0.0;
    // max residual / min(1, 1/(H ||y||)) over points with ||y|| >= 0.05.
    double max_ratio = 0.0;
    std::size_t ratio_points = 0;
};

BurievStats buriev_residual(std::span<const double> y_grid, double x, std::int64_t h_max);

// Samples on alpha_j = j / M, j = 0..M-1.
std::vector<SumSample> sample_grid(SumKind kind, std::int64_t grid, std::span<const ValueEntry> values,
                                   std::span<const double> logs, const ThetaTable* theta,
                                   std::size_t threads = 0);

// CSV header alpha,re,im,abs.
void write_samples_csv(std::ostream& os, std::span<const SumSample> samples);
void write_samples_json(std::ostream& os, std::span<const SumSample> samples, const WindowParams& w);

}  // namespace tanrep
