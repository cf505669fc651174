#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace tanrep {

// Escalate to extended precision when the double value is closer than this
// to an integer (absolute floor of the guard; see floor_guard).
inline constexpr double kEscalationGuard = 1e-6;
// Extended precision must separate the value from an integer by this much.
inline constexpr double kAmbiguityThreshold = 0x1p-40;
inline constexpr unsigned kExtendedBits = 128;

struct ValueEntry {
    std::int64_t n = 0;
    std::int64_t f = 0;
    double frac = 0.0;
    // True when the floor was settled by the 128-bit path.
    bool certified = false;
};

using ValueTable = std::vector<ValueEntry>;

// Which floor sequence to evaluate.
enum class Sequence {
    Tangent,    // [n^c tan^theta(log n)]
    Classical,  // [n^c]
};

// Escalation threshold used by the double path for a value of magnitude v.
double floor_guard(double v);

ValueEntry floor_value(std::int64_t n, double c, double theta,
                       Sequence seq = Sequence::Tangent);

// The 128-bit path on its own; certified is always true on return.
ValueEntry floor_value_extended(std::int64_t n, double c, double theta,
                                Sequence seq = Sequence::Tangent);

// Double path with no escalation (used for certification checks).
ValueEntry floor_value_double(std::int64_t n, double c, double theta,
                              Sequence seq = Sequence::Tangent);

double frac_norm(std::int64_t n, double c, double theta);

// min(frac(v), 1 - frac(v)).
double distance_to_nearest_integer(double v);

ValueTable tabulate(std::span<const std::int64_t> ns, double c, double theta,
                    Sequence seq = Sequence::Tangent, std::size_t threads = 0);

// CSV with header n,f,frac,certified; frac printed to 12 decimals.
void write_value_csv(std::ostream& os, std::span<const ValueEntry> table);

}  // namespace tanrep
