#include "tanrep/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "tanrep/errors.hpp"
#include "tanrep/io.hpp"
#include "tanrep/parallel.hpp"

namespace tanrep {

double main_term_denominator(double c, double theta) {
    return std::pow(2.0, theta) * c + 5.0 * theta * std::pow(2.0, theta - 1.0);
}

double main_term(const WindowParams& w) {
    return std::pow(w.delta2, 1.0 - w.c) * w.x * w.x / main_term_denominator(w.c, w.theta);
}

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

}  // namespace

double gamma_fn(double x) {
    if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
    x -= 1.0;
    double a = kLanczos[0];
    const double t = x + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double classical_main_term(double c, std::int64_t n) {
    const double g = gamma_fn(1.0 + 1.0 / c);
    return g * g * g / gamma_fn(3.0 / c) * std::pow(static_cast<double>(n), 3.0 / c - 1.0);
}

ThetaTable theta_table(const WindowParams& w, std::size_t threads) {
    ThetaTable t;
    t.m_lo = static_cast<std::int64_t>(std::floor(w.n1)) + 1;
    t.m_hi = w.n_star;
    if (t.m_hi < t.m_lo) return t;
    const std::int64_t size = t.m_hi - t.m_lo + 1;
    if (size > kMaxThetaGrid)
        throw Error(ErrorKind::BandTooWide, "Theta grid has " + std::to_string(size) + " points");
    t.weights.resize(static_cast<std::size_t>(size));
    if (threads == 0) threads = default_threads();
    parallel_chunks(t.weights.size(), threads, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t i = b; i < e; ++i)
            t.weights[i] = weight_w(static_cast<double>(t.m_lo + static_cast<std::int64_t>(i)), w);
    });
    return t;
}

namespace {

// Sum over m of a(m) b(n - m) with both indices on the grid.
double convolve_at(const ThetaTable& t, std::int64_t n, std::span<const double> other,
                   std::int64_t other_lo, std::vector<double>& scratch) {
    const std::int64_t other_hi = other_lo + static_cast<std::int64_t>(other.size()) - 1;
    const std::int64_t lo = std::max(t.m_lo, n - other_hi);
    const std::int64_t hi = std::min(t.m_hi, n - other_lo);
    scratch.clear();
    for (std::int64_t m = lo; m <= hi; ++m)
        scratch.push_back(t.at(m) * other[static_cast<std::size_t>(n - m - other_lo)]);
    return pairwise_sum(scratch);
}

}  // namespace

double psi_k_exact(const ThetaTable& t, std::int64_t n, int k, std::size_t threads) {
    if (k < 1 || k > 3) throw Error(ErrorKind::InvalidParameter, "psi_k_exact supports k = 1, 2, 3");
    if (t.weights.empty()) return 0.0;
    std::vector<double> scratch;
    if (k == 1) return t.at(n);
    if (k == 2) return convolve_at(t, n, t.weights, t.m_lo, scratch);

    // k = 3: Psi_3(n) = sum_m w(m) Psi_2(n - m); Psi_2 tabulated on the needed range.
    const std::int64_t s_lo = std::max(2 * t.m_lo, n - t.m_hi);
    const std::int64_t s_hi = std::min(2 * t.m_hi, n - t.m_lo);
    if (s_lo > s_hi) return 0.0;
    std::vector<double> psi2(static_cast<std::size_t>(s_hi - s_lo + 1));
    if (threads == 0) threads = default_threads();
    parallel_chunks(psi2.size(), threads, [&](std::size_t b, std::size_t e, std::size_t) {
        std::vector<double> local;
        for (std::size_t i = b; i < e; ++i)
            psi2[i] = convolve_at(t, s_lo + static_cast<std::int64_t>(i), t.weights, t.m_lo, local);
    });
    return convolve_at(t, n, psi2, s_lo, scratch);
}

double psi_k_exact(const WindowParams& w, std::int64_t n, int k) {
    if (k < 1 || k > 3) throw Error(ErrorKind::InvalidParameter, "psi_k_exact supports k = 1, 2, 3");
    return psi_k_exact(theta_table(w), n, k);
}

CompareReport compare_report(std::span<const RepReport> scan, const WindowParams& w) {
    if (scan.empty()) throw Error(ErrorKind::InvalidParameter, "compare_report needs a nonempty scan");
    CompareReport rep;
    rep.window = w;
    const double mt = main_term(w);
    std::vector<double> ratios;
    for (const auto& r : scan) {
        CompareRow row;
        row.target = r.target;
        row.count = r.count;
        row.gamma_observed = r.weighted;
        row.main_term = mt;
        row.ratio = mt > 0.0 ? r.weighted / mt : 0.0;
        ratios.push_back(row.ratio);
        rep.rows.push_back(row);
    }
    rep.mean_ratio = pairwise_sum(ratios) / static_cast<double>(ratios.size());
    std::sort(ratios.begin(), ratios.end());
    const std::size_t mid = ratios.size() / 2;
    rep.median_ratio = ratios.size() % 2 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
    return rep;
}

void write_compare_csv(std::ostream& os, const CompareReport& report) {
    os << "N,count,weighted,main_term,ratio\n";
    for (const auto& r : report.rows)
        os << r.target << ',' << r.count << ',' << format_real(r.gamma_observed) << ','
           << format_real(r.main_term) << ',' << format_real(r.ratio) << '\n';
}

void write_compare_json(std::ostream& os, const CompareReport& report) {
    nlohmann::ordered_json j;
    j["window"] = window_to_json(report.window);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        nlohmann::ordered_json row;
        row["N"] = r.target;
        row["count"] = r.count;
        row["weighted"] = r.gamma_observed;
        row["main_term"] = r.main_term;
        row["ratio"] = r.ratio;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["mean_ratio"] = report.mean_ratio;
    j["median_ratio"] = report.median_ratio;
    os << j.dump(2) << '\n';
}

}  // namespace tanrep
