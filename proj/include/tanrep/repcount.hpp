#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "tanrep/seqeval.hpp"
#include "tanrep/window.hpp"

namespace tanrep {

enum class Method { Mitm, Naive };

std::string_view to_string(Method m) noexcept;

struct RepReport {
    std::int64_t target = 0;
    std::int64_t count = 0;  // ordered triples
    double weighted = 0.0;   // sum of log p1 log p2 log p3
    Method method = Method::Mitm;
    std::shared_ptr<const WindowParams> window;
};

// Ordered pair sums f(p_i) + f(p_j), stored densely over [base, base + size).
class PairMap {
public:
    PairMap() = default;
    PairMap(std::span<const ValueEntry> values, std::span<const double> logs,
            std::size_t threads = 0);

    std::int64_t base() const noexcept { return base_; }
    std::size_t size() const noexcept { return counts_.size(); }
    std::int64_t count_at(std::int64_t s) const noexcept;
    double weight_at(std::int64_t s) const noexcept;
    // Sum of all pair counts; equals (number of primes)^2.
    std::int64_t total_count() const noexcept;

private:
    std::int64_t base_ = 0;
    std::vector<std::int64_t> counts_;
    std::vector<double> weights_;
};

// Upper limits guarding against accidental blowups.
inline constexpr std::size_t kNaiveMaxPrimes = 10'000;
inline constexpr std::int64_t kMaxBandWidth = 1'000'000;
inline constexpr std::int64_t kMaxPairSpan = std::int64_t{1} << 28;
inline constexpr std::int64_t kMaxPairSum = std::int64_t{1} << 50;
inline constexpr std::int64_t kClassicalMaxTarget = 100'000;

RepReport count_ternary_mitm(std::span<const ValueEntry> values, std::span<const double> logs,
                             std::int64_t n, std::size_t threads = 0);

// Lookup against a prebuilt pair map.
RepReport count_ternary_mitm(const PairMap& pairs, std::span<const ValueEntry> values,
                             std::span<const double> logs, std::int64_t n);

RepReport count_ternary_naive(std::span<const ValueEntry> values, std::span<const double> logs,
                              std::int64_t n);

std::vector<RepReport> scan_band(std::span<const ValueEntry> values, std::span<const double> logs,
                                 std::int64_t n_lo, std::int64_t n_hi, std::size_t threads = 0);

// Lexicographically smallest ordered (p1, p2) with f(p1) + f(p2) = n.
std::optional<std::pair<std::int64_t, std::int64_t>> find_binary(
    std::span<const ValueEntry> values, std::span<const double> logs, std::int64_t n);

// Ordered triples with n = [p1^c] + [p2^c] + [p3^c].
RepReport count_classical(double c, std::int64_t n, std::size_t threads = 0);

// The inputs count_classical feeds to the counting machinery, for oracles.
struct ClassicalTable {
    ValueTable values;
    std::vector<double> logs;
};
ClassicalTable classical_table(double c, std::int64_t n);

// Window primes with certified f values and log weights.
struct WindowTable {
    std::shared_ptr<const WindowParams> window;
    ValueTable values;
    std::vector<double> logs;
};
WindowTable build_window_table(const WindowParams& w, std::size_t threads = 0);

void write_rep_csv(std::ostream& os, std::span<const RepReport> reports);
void write_rep_json(std::ostream& os, std::span<const RepReport> reports);

}  // namespace tanrep
