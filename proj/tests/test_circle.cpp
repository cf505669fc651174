#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "tanrep/circle.hpp"
#include "tanrep/errors.hpp"
#include "tanrep/repcount.hpp"

using namespace tanrep;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const WindowTable& k2() {
    static const WindowTable t = build_window_table(window_from_index(2, 1.05, 2.0));
    return t;
}

std::int64_t fmax_of(const ValueTable& v) {
    std::int64_t m = 0;
    for (const auto& e : v) m = std::max(m, e.f);
    return m;
}

}  // namespace

TEST_CASE("s_alpha symmetries") {
    const auto& t = k2();
    double total = 0.0;
    double alternating = 0.0;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        total += t.logs[i];
        alternating += (t.values[i].f % 2 ? -1.0 : 1.0) * t.logs[i];
    }
    const Complex s0 = s_alpha(t.values, t.logs, 0.0);
    CHECK(rel(s0.real(), total) < 1e-14);
    CHECK(s0.imag() == 0.0);
    const Complex sh = s_alpha(t.values, t.logs, 0.5);
    CHECK(std::abs(sh.real() - alternating) < 1e-10);
    CHECK(std::abs(sh.imag()) < 1e-10);
    CHECK(std::abs(s_alpha(t.values, t.logs, 1.0) - s0) < 1e-12);

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> as(-0.5, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double a = as(rng);
        const Complex s = s_alpha(t.values, t.logs, a);
        CHECK(std::abs(s_alpha(t.values, t.logs, -a) - std::conj(s)) < 1e-9);
        CHECK(std::abs(s) <= s0.real() * (1 + 1e-12));
    }
}

TEST_CASE("theta_alpha") {
    const auto w = window_from_index(3, 1.02, 1.5);
    const ThetaTable table = theta_table(w);
    const Complex th0 = theta_alpha(table, 0.0);
    // Sum of dy/dt over the t-range is about delta2 - delta1.
    CHECK(rel(th0.real(), w.delta2 - w.delta1) < 0.01);
    CHECK(rel(th0.real(), 10315.346973072083) < 1e-9);  // scipy oracle
    for (double a : {0.013, 0.2, 0.37}) {
        const Complex v = theta_alpha(table, a);
        CHECK(std::abs(theta_alpha(table, -a) - std::conj(v)) < 1e-10 * th0.real());
        CHECK(std::abs(theta_alpha(table, a + 1.0) - v) < 1e-10 * th0.real());
        CHECK(std::abs(v) <= th0.real());
    }
}

TEST_CASE("a_alpha on k=2") {
    const auto w = window_from_index(2, 1.05, 2.0);
    const ValueTable ints = integer_value_table(w);
    CHECK(ints.size() == 446);
    CHECK(a_alpha(ints, 0.0).real() == 446.0);
    // numpy profile on alpha = j/256
    const auto samples = sample_grid(SumKind::A, 256, ints, {}, nullptr);
    double best = 0.0;
    std::size_t arg = 0;
    double mean = 0.0;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const double m = std::abs(samples[j].value);
        CHECK(m <= 446.0 + 1e-9);
        mean += m;
        if (j > 0 && m > best) {
            best = m;
            arg = j;
        }
    }
    CHECK(arg == 107);
    CHECK(best == doctest::Approx(38.751930344846194).epsilon(1e-9));
    CHECK(std::abs(samples[64].value) == doctest::Approx(12.165525060593328).epsilon(1e-9));
    CHECK(mean / 256.0 == doctest::Approx(18.938045644961306).epsilon(1e-9));
    const Complex a = a_alpha(ints, 0.31);
    CHECK(std::abs(a_alpha(ints, -0.31) - std::conj(a)) < 1e-9);
}

TEST_CASE("full-circle integral equals Gamma(N)") {
    const auto& t = k2();
    const std::int64_t m = 3 * fmax_of(t.values) + 1;
    const PairMap pm(t.values, t.logs);
    for (std::int64_t n : {t.window->n_star, t.window->n_star + 13}) {
        const auto res = circle_integral(t.values, t.logs, n, 0.0, 1.0, m);
        const double gamma = count_ternary_mitm(pm, t.values, t.logs, n).weighted;
        CHECK(res.warnings.empty());
        CHECK(rel(res.value.real(), gamma) < 1e-6);
        CHECK(std::abs(res.value.imag()) < 1e-6 * gamma);
    }
    // Outside the representable range the integral vanishes.
    const double s0 = s_alpha(t.values, t.logs, 0.0).real();
    const auto none = circle_integral(t.values, t.logs, 3 * fmax_of(t.values) + 5, 0.0, 1.0, m);
    CHECK(std::abs(none.value) < 1e-6 * s0 * s0 * s0);
}

TEST_CASE("major plus minor arcs") {
    const auto& t = k2();
    const double tau = t.window->tau;
    const std::int64_t n = t.window->n_star;
    const std::int64_t m = 3 * fmax_of(t.values) + 1;
    const auto shifted = circle_integral(t.values, t.logs, n, -tau, 1.0 - tau, m);
    const auto major = circle_integral(t.values, t.logs, n, -tau, tau, 4 * m);
    const auto minor = circle_integral(t.values, t.logs, n, tau, 1.0 - tau, 4 * m);
    const double gamma = count_ternary_mitm(t.values, t.logs, n).weighted;
    CHECK(rel(shifted.value.real(), gamma) < 1e-6);
    const Complex sum = major.value + minor.value;
    CHECK(std::abs(sum - shifted.value) < 1e-3 * gamma);
}

TEST_CASE("coarse grid warning") {
    const auto& t = k2();
    const auto res = circle_integral(t.values, t.logs, t.window->n_star, 0.0, 1.0, 64);
    CHECK_FALSE(res.warnings.empty());
    CHECK_THROWS_AS(circle_integral(t.values, t.logs, 1, 0.0, 1.0, 8), Error);
    CHECK_THROWS_AS(circle_integral(t.values, t.logs, 1, 0.5, 0.5, 64), Error);
}

TEST_CASE("fourier coefficients") {
    const Complex c0 = fourier_coeff_ch(0.5, 0);
    CHECK(std::abs(c0.real()) < 1e-15);
    CHECK(c0.imag() == doctest::Approx(-2.0 / std::numbers::pi).epsilon(1e-14));
    for (std::int64_t h = -5; h <= 5; ++h)
        if (h != -3) CHECK(std::abs(fourier_coeff_ch(3.0, h)) < 1e-14);
    CHECK_THROWS_AS(fourier_coeff_ch(3.0, -3), Error);
    for (std::int64_t h = 1; h <= 64; ++h) {
        const double x = 0.37;
        const double mag = std::abs(fourier_coeff_ch(x, h));
        CHECK(mag <= 1.0 / (std::numbers::pi * std::abs(h + x)) + 1e-15);
        CHECK(mag * (h + x) == doctest::Approx(std::abs(fourier_coeff_ch(x, 1)) * (1 + x)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(fourier_coeff_ch(-2.0, 2), Error);
}

TEST_CASE("buriev residuals") {
    const std::vector<double> half{0.5};
    const auto one = buriev_residual(half, 0.37, 1000);
    CHECK(one.max_residual == doctest::Approx(1.079801630809041e-07).epsilon(1e-4));  // numpy

    std::vector<double> grid;
    for (int i = 0; i < 1000; ++i) grid.push_back(0.05 + 0.9 * (i + 0.5) / 1000.0);
    const auto coarse = buriev_residual(grid, 0.37, 16);
    const auto fine = buriev_residual(grid, 0.37, 256);
    CHECK(fine.mean_residual < coarse.mean_residual);
    CHECK(coarse.max_residual <= 1.0);
    CHECK(fine.max_residual <= 1.0);
    CHECK(fine.ratio_points == 1000);
    CHECK_THROWS_AS(buriev_residual(grid, 0.37, 2), Error);
}
