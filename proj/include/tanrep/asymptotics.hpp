#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tanrep/parallel.hpp"
#include "tanrep/repcount.hpp"
#include "tanrep/window.hpp"

namespace tanrep {

inline constexpr std::int64_t kMaxThetaGrid = 10'000'000;

// 2^theta c + 5 theta 2^(theta-1)
double main_term_denominator(double c, double theta);

// Delta2^(1-c) X^2 / (2^theta c + 5 theta 2^(theta-1)).
double main_term(const WindowParams& w);

// Lanczos approximation (g = 7, nine coefficients); relative error below
// 1e-13 on (0.5, 10).
double gamma_fn(double x);

// Gamma^3(1 + 1/c) / Gamma(3/c) N^(3/c - 1).
double classical_main_term(double c, std::int64_t n);

// Coefficients weight_w(m) for integer m in (N1, n_star].
struct ThetaTable {
    std::int64_t m_lo = 0;  // first integer above N1
    std::int64_t m_hi = 0;  // n_star
    std::vector<double> weights;

    double at(std::int64_t m) const noexcept {
        return (m < m_lo || m > m_hi) ? 0.0 : weights[static_cast<std::size_t>(m - m_lo)];
    }
};

ThetaTable theta_table(const WindowParams& w, std::size_t threads = 0);

// Psi_k(N) as the exact k-fold convolution of the Theta coefficients, k in {1,2,3}.
double psi_k_exact(const WindowParams& w, std::int64_t n, int k);
double psi_k_exact(const ThetaTable& table, std::int64_t n, int k, std::size_t threads = 0);

struct CompareRow {
    std::int64_t target = 0;
    std::int64_t count = 0;
    double gamma_observed = 0.0;
    double main_term = 0.0;
    double ratio = 0.0;
};

struct CompareReport {
    WindowParams window;
    std::vector<CompareRow> rows;
    double mean_ratio = 0.0;
    double median_ratio = 0.0;
};

CompareReport compare_report(std::span<const RepReport> scan, const WindowParams& w);

// CSV header N,count,weighted,main_term,ratio.
void write_compare_csv(std::ostream& os, const CompareReport& report);
void write_compare_json(std::ostream& os, const CompareReport& report);

}  // namespace tanrep
