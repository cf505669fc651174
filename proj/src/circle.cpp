#include "tanrep/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "tanrep/errors.hpp"
#include "tanrep/io.hpp"
#include "tanrep/parallel.hpp"

namespace tanrep {

std::string_view to_string(SumKind kind) noexcept {
    switch (kind) {
        case SumKind::S: return "S";
        case SumKind::Theta: return "Theta";
        case SumKind::A: return "A";
    }
    return "?";
}

Complex unit_phase(double y) {
    const double r = y - std::floor(y);
    const double ang = 2.0 * std::numbers::pi * r;
    return {std::cos(ang), std::sin(ang)};
}

namespace {

// frac(alpha * m) computed as frac(frac(alpha) * m) to keep the product small.
double phase_arg(double alpha, std::int64_t m) {
    const double a = alpha - std::floor(alpha);
    return a * static_cast<double>(m);
}

}  // namespace

Complex s_alpha(std::span<const ValueEntry> values, std::span<const double> logs, double alpha) {
    if (values.size() != logs.size())
        throw Error(ErrorKind::WindowMismatch, "value table and log weights differ in length");
    std::vector<Complex> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) terms[i] = logs[i] * unit_phase(phase_arg(alpha, values[i].f));
    return pairwise_sum(terms);
}

Complex theta_alpha(const ThetaTable& table, double alpha) {
    std::vector<Complex> terms(table.weights.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
        terms[i] = table.weights[i] *
                   unit_phase(phase_arg(alpha, table.m_lo + static_cast<std::int64_t>(i)));
    return pairwise_sum(terms);
}

Complex theta_alpha(const WindowParams& w, double alpha) { return theta_alpha(theta_table(w), alpha); }

ValueTable integer_value_table(const WindowParams& w, std::size_t threads) {
    const auto lo = static_cast<std::int64_t>(std::floor(w.delta1)) + 1;
    const auto hi = static_cast<std::int64_t>(std::floor(w.delta2));
    std::vector<std::int64_t> ns;
    for (std::int64_t n = lo; n <= hi; ++n) ns.push_back(n);
    return tabulate(ns, w.c, w.theta, Sequence::Tangent, threads);
}

Complex a_alpha(std::span<const ValueEntry> integers, double alpha) {
    std::vector<Complex> terms(integers.size());
    for (std::size_t i = 0; i < integers.size(); ++i) terms[i] = unit_phase(phase_arg(alpha, integers[i].f));
    return pairwise_sum(terms);
}

Complex a_alpha(const WindowParams& w, double alpha) { return a_alpha(integer_value_table(w), alpha); }

CircleResult circle_integral(std::span<const ValueEntry> values, std::span<const double> logs,
                             std::int64_t n, double a, double b, std::int64_t grid,
                             std::size_t threads) {
    if (values.size() != logs.size())
        throw Error(ErrorKind::WindowMismatch, "value table and log weights differ in length");
    if (!(a < b)) throw Error(ErrorKind::InvalidParameter, "circle_integral requires a < b");
    if (grid < 16) throw Error(ErrorKind::InvalidParameter, "grid size M must be at least 16");

    CircleResult res;
    std::int64_t fmax = 0;
    for (const auto& v : values) fmax = std::max(fmax, v.f);
    const bool full = (b - a) == 1.0;
    if (full && grid < 3 * fmax)
        res.warnings.push_back("GridTooCoarse: M = " + std::to_string(grid) + " < 3 f_max = " +
                               std::to_string(3 * fmax));

    const auto panels = static_cast<std::size_t>(grid);
    // Full period: nodes j/M shifted by a; endpoint weights merge into one.
    const std::size_t nodes = full ? panels : panels + 1;
    const double h = (b - a) / static_cast<double>(grid);
    const bool integer_nodes = full && a == 0.0;

    std::vector<Complex> terms(nodes);
    if (threads == 0) threads = default_threads();
    parallel_chunks(nodes, threads, [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t j = lo; j < hi; ++j) {
            Complex s{};
            Complex tail;
            if (integer_nodes) {
                // alpha_j = j / M exactly: reduce the integer phase j f mod M.
                const auto jj = static_cast<std::int64_t>(j);
                Complex acc{};
                for (std::size_t i = 0; i < values.size(); ++i) {
                    const std::int64_t r = (jj * (values[i].f % grid)) % grid;
                    acc += logs[i] * unit_phase(static_cast<double>(r) / static_cast<double>(grid));
                }
                s = acc;
                const std::int64_t rn = (jj * (((-n) % grid + grid) % grid)) % grid;
                tail = unit_phase(static_cast<double>(rn) / static_cast<double>(grid));
            } else {
                const double alpha = a + h * static_cast<double>(j);
                s = s_alpha(values, logs, alpha);
                tail = unit_phase(-phase_arg(alpha, n));
            }
            double wgt = h;
            if (!full && (j == 0 || j == nodes - 1)) wgt *= 0.5;
            terms[j] = wgt * s * s * s * tail;
        }
    });
    res.value = pairwise_sum(terms);
    return res;
}

Complex fourier_coeff_ch(double x, std::int64_t h) {
    const double denom = static_cast<double>(h) + x;
    if (std::abs(denom) < 1e-12) throw Error(ErrorKind::Singular, "h + x vanishes");
    const Complex num = 1.0 - unit_phase(-x);
    return num / Complex(0.0, 2.0 * std::numbers::pi * denom);
}

BurievStats buriev_residual(std::span<const double> y_grid, double x, std::int64_t h_max) {
    if (h_max < 3) throw Error(ErrorKind::InvalidParameter, "H must be at least 3");
    std::vector<Complex> coeff;
    for (std::int64_t h = -h_max; h <= h_max; ++h) coeff.push_back(fourier_coeff_ch(x, h));

    BurievStats st;
    std::vector<double> residuals;
    for (const double y : y_grid) {
        const double fy = y - std::floor(y);
        const Complex lhs = unit_phase(-x * fy);
        std::vector<Complex> terms(coeff.size());
        for (std::int64_t h = -h_max; h <= h_max; ++h)
            terms[static_cast<std::size_t>(h + h_max)] =
                coeff[static_cast<std::size_t>(h + h_max)] * unit_phase(static_cast<double>(h) * fy);
        const double res = std::abs(lhs - pairwise_sum(terms));
        residuals.push_back(res);
        st.max_residual = std::max(st.max_residual, res);
        const double dist = std::min(fy, 1.0 - fy);
        if (dist >= 0.05) {
            const double bound = std::min(1.0, 1.0 / (static_cast<double>(h_max) * dist));
            st.max_ratio = std::max(st.max_ratio, res / bound);
            ++st.ratio_points;
        }
    }
    if (!residuals.empty()) st.mean_residual = pairwise_sum(residuals) / static_cast<double>(residuals.size());
    return st;
}

std::vector<SumSample> sample_grid(SumKind kind, std::int64_t grid, std::span<const ValueEntry> values,
                                   std::span<const double> logs, const ThetaTable* theta,
                                   std::size_t threads) {
    if (grid < 1) throw Error(ErrorKind::InvalidParameter, "grid must be positive");
    if (kind == SumKind::Theta && theta == nullptr)
        throw Error(ErrorKind::InvalidParameter, "Theta sampling needs a coefficient table");
    std::vector<SumSample> out(static_cast<std::size_t>(grid));
    if (threads == 0) threads = default_threads();
    parallel_chunks(out.size(), threads, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t j = b; j < e; ++j) {
            const double alpha = static_cast<double>(j) / static_cast<double>(grid);
            Complex v;
            switch (kind) {
                case SumKind::S: v = s_alpha(values, logs, alpha); break;
                case SumKind::Theta: v = theta_alpha(*theta, alpha); break;
                case SumKind::A: v = a_alpha(values, alpha); break;
            }
            out[j] = {alpha, v, kind};
        }
    });
    return out;
}

void write_samples_csv(std::ostream& os, std::span<const SumSample> samples) {
    os << "alpha,re,im,abs\n";
    for (const auto& s : samples)
        os << format_real(s.alpha) << ',' << format_real(s.value.real()) << ','
           << format_real(s.value.imag()) << ',' << format_real(std::abs(s.value)) << '\n';
}

void write_samples_json(std::ostream& os, std::span<const SumSample> samples, const WindowParams& w) {
    nlohmann::ordered_json j;
    j["window"] = window_to_json(w);
    j["kind"] = samples.empty() ? std::string("S") : std::string(to_string(samples.front().kind));
    auto rows = nlohmann::ordered_json::array();
    for (const auto& s : samples) {
        nlohmann::ordered_json row;
        row["alpha"] = s.alpha;
        row["re"] = s.value.real();
        row["im"] = s.value.imag();
        row["abs"] = std::abs(s.value);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << '\n';
}

}  // namespace tanrep
