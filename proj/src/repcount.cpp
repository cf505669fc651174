#include "tanrep/repcount.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "tanrep/errors.hpp"
#include "tanrep/io.hpp"
#include "tanrep/parallel.hpp"
#include "tanrep/primesieve.hpp"

namespace tanrep {

std::string_view to_string(Method m) noexcept { return m == Method::Mitm ? "mitm" : "naive"; }

namespace {

void check_lengths(std::span<const ValueEntry> values, std::span<const double> logs) {
    if (values.size() != logs.size())
        throw Error(ErrorKind::WindowMismatch,
                    "value table has " + std::to_string(values.size()) + " entries but " +
                        std::to_string(logs.size()) + " log weights");
}

// Indices ordered by (f, position).
std::vector<std::size_t> order_by_f(std::span<const ValueEntry> values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a].f < values[b].f; });
    return idx;
}

std::pair<std::int64_t, std::int64_t> f_range(std::span<const ValueEntry> values) {
    auto [lo, hi] = std::minmax_element(values.begin(), values.end(),
                                        [](const auto& a, const auto& b) { return a.f < b.f; });
    return {lo->f, hi->f};
}

RepReport zero_report(std::int64_t n, Method m) {
    RepReport r;
    r.target = n;
    r.method = m;
    return r;
}

}  // namespace

PairMap::PairMap(std::span<const ValueEntry> values, std::span<const double> logs,
                 std::size_t threads) {
    check_lengths(values, logs);
    if (values.empty()) return;
    const auto [fmin, fmax] = f_range(values);
    if (fmin < 0 || fmax > kMaxPairSum / 2)
        throw Error(ErrorKind::TooLarge, "f values outside the 64-bit pair-sum guard");
    const std::int64_t span = 2 * (fmax - fmin) + 1;
    if (span > kMaxPairSpan) throw Error(ErrorKind::TooLarge, "pair-sum span too wide");

    base_ = 2 * fmin;
    counts_.assign(static_cast<std::size_t>(span), 0);
    weights_.assign(static_cast<std::size_t>(span), 0.0);

    const auto idx = order_by_f(values);
    std::vector<std::int64_t> fs(idx.size());
    std::vector<double> ls(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        fs[i] = values[idx[i]].f;
        ls[i] = logs[idx[i]];
    }

    // Each worker owns a slice of the sum axis and walks pairs in (i, j)
    // order, so every slot accumulates in the same order for any thread count.
    if (threads == 0) threads = default_threads();
    parallel_chunks(static_cast<std::size_t>(span), threads,
                    [&](std::size_t b, std::size_t e, std::size_t) {
                        const std::int64_t s_lo = base_ + static_cast<std::int64_t>(b);
                        const std::int64_t s_hi = base_ + static_cast<std::int64_t>(e);
                        for (std::size_t i = 0; i < fs.size(); ++i) {
                            const auto first =
                                std::lower_bound(fs.begin(), fs.end(), s_lo - fs[i]);
                            const auto last = std::lower_bound(first, fs.end(), s_hi - fs[i]);
                            for (auto it = first; it != last; ++it) {
                                const auto j = static_cast<std::size_t>(it - fs.begin());
                                const auto slot = static_cast<std::size_t>(fs[i] + *it - base_);
                                ++counts_[slot];
                                weights_[slot] += ls[i] * ls[j];
                            }
                        }
                    });
}

std::int64_t PairMap::count_at(std::int64_t s) const noexcept {
    const std::int64_t off = s - base_;
    if (off < 0 || off >= static_cast<std::int64_t>(counts_.size())) return 0;
    return counts_[static_cast<std::size_t>(off)];
}

double PairMap::weight_at(std::int64_t s) const noexcept {
    const std::int64_t off = s - base_;
    if (off < 0 || off >= static_cast<std::int64_t>(weights_.size())) return 0.0;
    return weights_[static_cast<std::size_t>(off)];
}

std::int64_t PairMap::total_count() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

RepReport count_ternary_mitm(const PairMap& pairs, std::span<const ValueEntry> values,
                             std::span<const double> logs, std::int64_t n) {
    check_lengths(values, logs);
    RepReport r = zero_report(n, Method::Mitm);
    if (values.empty()) return r;
    const auto [fmin, fmax] = f_range(values);
    if (n < 3 * fmin || n > 3 * fmax) return r;

    std::vector<double> terms;
    terms.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        const std::int64_t s = n - values[k].f;
        const std::int64_t cnt = pairs.count_at(s);
        if (cnt == 0) continue;
        r.count += cnt;
        terms.push_back(logs[k] * pairs.weight_at(s));
    }
    r.weighted = pairwise_sum(terms);
    return r;
}

RepReport count_ternary_mitm(std::span<const ValueEntry> values, std::span<const double> logs,
                             std::int64_t n, std::size_t threads) {
    check_lengths(values, logs);
    if (values.empty()) return zero_report(n, Method::Mitm);
    const auto [fmin, fmax] = f_range(values);
    if (n < 3 * fmin || n > 3 * fmax) return zero_report(n, Method::Mitm);
    const PairMap pairs(values, logs, threads);
    return count_ternary_mitm(pairs, values, logs, n);
}

RepReport count_ternary_naive(std::span<const ValueEntry> values, std::span<const double> logs,
                              std::int64_t n) {
    check_lengths(values, logs);
    if (values.size() > kNaiveMaxPrimes)
        throw Error(ErrorKind::TooLarge, "naive triple loop limited to 10^4 primes");
    RepReport r = zero_report(n, Method::Naive);
    const std::size_t sz = values.size();
    for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t j = 0; j < sz; ++j) {
            const std::int64_t rest = n - values[i].f - values[j].f;
            const double lij = logs[i] * logs[j];
            for (std::size_t k = 0; k < sz; ++k) {
                if (values[k].f != rest) continue;
                ++r.count;
                r.weighted += lij * logs[k];
            }
        }
    }
    return r;
}

std::vector<RepReport> scan_band(std::span<const ValueEntry> values, std::span<const double> logs,
                                 std::int64_t n_lo, std::int64_t n_hi, std::size_t threads) {
    check_lengths(values, logs);
    if (n_lo > n_hi) throw Error(ErrorKind::InvalidRange, "band bounds out of order");
    if (n_hi - n_lo + 1 > kMaxBandWidth) throw Error(ErrorKind::TooLarge, "band wider than 10^6");
    const PairMap pairs(values, logs, threads);
    std::vector<RepReport> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (std::int64_t n = n_lo; n <= n_hi; ++n) out.push_back(count_ternary_mitm(pairs, values, logs, n));
    return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> find_binary(
    std::span<const ValueEntry> values, std::span<const double> logs, std::int64_t n) {
    check_lengths(values, logs);
    std::vector<std::pair<std::int64_t, std::int64_t>> by_f;  // (f, n), smallest n first per f
    by_f.reserve(values.size());
    for (const auto& v : values) by_f.emplace_back(v.f, v.n);
    std::sort(by_f.begin(), by_f.end());

    std::vector<std::pair<std::int64_t, std::int64_t>> by_n;  // (n, f)
    by_n.reserve(values.size());
    for (const auto& v : values) by_n.emplace_back(v.n, v.f);
    std::sort(by_n.begin(), by_n.end());

    for (const auto& [p1, f1] : by_n) {
        const std::int64_t need = n - f1;
        const auto it = std::lower_bound(by_f.begin(), by_f.end(),
                                         std::pair<std::int64_t, std::int64_t>{need, INT64_MIN});
        if (it != by_f.end() && it->first == need) return std::pair{p1, it->second};
    }
    return std::nullopt;
}

ClassicalTable classical_table(double c, std::int64_t n) {
    if (!(c > 1.0)) throw Error(ErrorKind::InvalidParameter, "classical count requires c > 1");
    if (n > kClassicalMaxTarget) throw Error(ErrorKind::TooLarge, "classical target above 10^5");
    ClassicalTable t;
    if (n < 2) return t;
    const auto limit = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / c)) + 1;
    if (limit < 2) return t;
    const PrimeBlock block = sieve_range(1, limit, 1);
    for (std::size_t i = 0; i < block.primes.size(); ++i) {
        const ValueEntry e = floor_value(block.primes[i], c, 0.0, Sequence::Classical);
        if (e.f > n) continue;
        t.values.push_back(e);
        t.logs.push_back(block.logs[i]);
    }
    return t;
}

RepReport count_classical(double c, std::int64_t n, std::size_t threads) {
    const ClassicalTable t = classical_table(c, n);
    return count_ternary_mitm(t.values, t.logs, n, threads);
}

WindowTable build_window_table(const WindowParams& w, std::size_t threads) {
    WindowTable t;
    t.window = std::make_shared<const WindowParams>(w);
    const PrimeBlock block = sieve_segment(w.delta1, w.delta2, threads);
    t.values = tabulate(block.primes, w.c, w.theta, Sequence::Tangent, threads);
    t.logs = block.logs;
    return t;
}

void write_rep_csv(std::ostream& os, std::span<const RepReport> reports) {
    os << "N,count,weighted\n";
    for (const auto& r : reports)
        os << r.target << ',' << r.count << ',' << format_real(r.weighted) << '\n';
}

void write_rep_json(std::ostream& os, std::span<const RepReport> reports) {
    nlohmann::ordered_json j;
    if (!reports.empty() && reports.front().window) j["window"] = window_to_json(*reports.front().window);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json row;
        row["N"] = r.target;
        row["count"] = r.count;
        row["weighted"] = r.weighted;
        row["method"] = std::string(to_string(r.method));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << '\n';
}

}  // namespace tanrep
