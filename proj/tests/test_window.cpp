#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tanrep/errors.hpp"
#include "tanrep/window.hpp"

using namespace tanrep;

namespace {

bool throws_kind(auto&& fn, ErrorKind kind) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("window_from_index k=0 endpoints") {
    const auto w = window_from_index(0, 1.05, 2.0, 0.05);
    // mpmath, 50 digits
    CHECK(w.delta1 == doctest::Approx(2.193280050738015).epsilon(1e-15));
    CHECK(w.delta2 == doctest::Approx(3.025718905003629).epsilon(1e-15));
    CHECK(w.x == w.delta2);
    CHECK(w.tau == 0.25);
    CHECK_FALSE(w.warnings.empty());
}

TEST_CASE("canonical targets") {
    CHECK(window_from_index(2, 1.05, 2.0).n_star == 9378);
    CHECK(window_from_index(3, 1.02, 1.5).n_star == 130913);
    CHECK(window_from_index(4, 1.02, 1.5).n_star == 3225861);
    const auto w = window_from_index(3, 1.02, 1.5);
    CHECK(rel(w.delta1, 27178.353932875152) < 1e-15);
    CHECK(rel(w.n1, 33335.549085241613) < 1e-14);
}

TEST_CASE("window invariants over k") {
    for (std::int64_t k = 0; k <= 6; ++k) {
        const auto w = window_from_index(k, 1.04, 1.7);
        CHECK(w.delta2 < 2 * w.delta1);
        CHECK(rel(w.delta2 / w.delta1, std::exp(std::atan(2.0) - std::numbers::pi / 4)) < 1e-12);
        CHECK(std::tan(std::log(w.delta1)) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::tan(std::log(w.delta2)) == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(static_cast<std::int64_t>(std::floor(std::log(w.x) / std::numbers::pi)) == k);
        CHECK(w.tau <= 0.25);
        CHECK(rel(forward_t(w.delta1, w), w.n1) < 1e-12);
        CHECK(rel(forward_t(w.delta2, w), std::pow(2.0, 1.7) * std::pow(w.delta2, 1.04)) < 1e-12);
    }
}

TEST_CASE("window parameter errors and warnings") {
    CHECK(throws_kind([] { window_from_index(-1, 1.05, 2.0); }, ErrorKind::InvalidParameter));
    CHECK(throws_kind([] { window_from_index(2, 1.0, 2.0); }, ErrorKind::InvalidParameter));
    CHECK(throws_kind([] { window_from_index(2, 1.05, 0.0); }, ErrorKind::InvalidParameter));
    CHECK(throws_kind([] { window_from_index(2, 1.05, 2.0, 0.0); }, ErrorKind::InvalidParameter));
    CHECK(window_from_index(2, 1.2, 0.5).warnings.size() >= 2);
}

TEST_CASE("solve_for_target") {
    const auto ref = window_from_index(3, 1.02, 1.5);
    const auto w = solve_for_target(ref.n_star, 1.02, 1.5);
    CHECK(w.k == 3);
    CHECK(w.residual <= 1e-6);
    CHECK(w.n_star == ref.n_star);

    // k_real = 2.5 exactly: N = 2^theta exp(c (2.5 pi + arctan 2)).
    const double half = std::pow(2.0, 1.5) * std::exp(1.02 * (2.5 * std::numbers::pi + std::atan(2.0)));
    CHECK(throws_kind([&] { solve_for_target(std::llround(half), 1.02, 1.5); }, ErrorKind::NoExactWindow));
    CHECK(throws_kind([] { solve_for_target(2, 1.05, 2.0); }, ErrorKind::NoExactWindow));
    CHECK(throws_kind([] { solve_for_target(1, 1.05, 2.0); }, ErrorKind::InvalidParameter));
}

TEST_CASE("forward_t") {
    const auto w0 = window_from_index(0, 1.05, 2.0);
    CHECK(forward_t(3.0, w0) == doctest::Approx(12.151152629945540).epsilon(1e-13));
    CHECK(forward_t(w0.delta1, w0) == doctest::Approx(std::pow(w0.delta1, 1.05)).epsilon(1e-12));
    CHECK(throws_kind([&] { forward_t(w0.delta2 + 0.01, w0); }, ErrorKind::OutOfWindow));
    CHECK(throws_kind([&] { forward_t(2.0, w0); }, ErrorKind::OutOfWindow));
}

TEST_CASE("invert_y endpoints and n_star") {
    const auto w = window_from_index(2, 1.05, 2.0);
    CHECK(invert_y(forward_t(w.delta2, w), w) == w.delta2);
    CHECK(invert_y(forward_t(w.delta1, w), w) == w.delta1);
    // n_star = 9378 sits 0.218 below t(delta2); mpmath bisection gives y exactly.
    const double y = invert_y(static_cast<double>(w.n_star), w);
    CHECK(rel(y, 1620.2409889257113) < 1e-12);
    CHECK(rel(y, w.delta2) < 1e-5);
    CHECK(throws_kind([&] { invert_y(1.0, w); }, ErrorKind::OutOfRange));
    CHECK(throws_kind([&] { invert_y(1e9, w); }, ErrorKind::OutOfRange));
    // k=3: n_star lies above t(delta2); the rounding slack admits it.
    const auto w3 = window_from_index(3, 1.02, 1.5);
    CHECK(static_cast<double>(w3.n_star) > forward_t(w3.delta2, w3));
    CHECK(invert_y(static_cast<double>(w3.n_star), w3) > w3.delta2);
}

TEST_CASE("property: monotonicity and round trip") {
    std::mt19937_64 rng(7);
    for (std::int64_t k : {1, 2, 3, 5}) {
        const auto w = window_from_index(k, 1.06, 2.5);
        std::uniform_real_distribution<double> ys(w.delta1, w.delta2);
        for (int i = 0; i < 1000; ++i) {
            double a = ys(rng), b = ys(rng);
            if (a > b) std::swap(a, b);
            if (a < b) CHECK(forward_t(a, w) < forward_t(b, w));
        }
        const auto dom = t_domain(w);
        std::uniform_real_distribution<double> ts(dom.lo + 0.5, dom.hi - 0.5);
        for (int i = 0; i < 1000; ++i) {
            const double t = ts(rng);
            CHECK(std::abs(forward_t(invert_y(t, w), w) - t) <= 1e-9 * t);
        }
    }
}

TEST_CASE("weight_w closed forms and finite differences") {
    const auto w = window_from_index(2, 1.05, 2.0);
    const double top = forward_t(w.delta2, w);
    CHECK(rel(weight_w(top, w), 0.028556538940491845) < 1e-12);
    CHECK(rel(weight_w(top, w), std::pow(w.delta2, -0.05) / ((2 * 1.05 + 5 * 2.0) * 2.0)) < 1e-12);
    const double bottom = forward_t(w.delta1, w);
    CHECK(rel(weight_w(bottom, w), std::pow(w.delta1, -0.05) / (1.05 + 2 * 2.0)) < 1e-12);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ms(bottom + 1.0, top - 1.0);
    for (int i = 0; i < 200; ++i) {
        const double m = ms(rng);
        const double h = 1e-4 * m;
        const double fd = (invert_y(m + h, w) - invert_y(m - h, w)) / (2 * h);
        const double ww = weight_w(m, w);
        CHECK(ww > 0.0);
        CHECK(rel(ww, fd) < 1e-5);
    }
}
