#pragma once

#include <cstdint>
#include <vector>

namespace tanrep {

inline constexpr std::uint64_t kSieveCeiling = std::uint64_t{1} << 50;

struct PrimeBlock {
    std::uint64_t lo = 0;  // exclusive
    std::uint64_t hi = 0;  // inclusive
    std::vector<std::int64_t> primes;
    std::vector<double> logs;
};

// Primes in (lo, hi] by segmented Eratosthenes over odd numbers.
PrimeBlock sieve_range(std::uint64_t lo, std::uint64_t hi, std::size_t threads = 0,
                       std::uint64_t ceiling = kSieveCeiling);

// Real bounds resolve to the integer range (floor(a), floor(b)].
PrimeBlock sieve_segment(double a, double b, std::size_t threads = 0,
                         std::uint64_t ceiling = kSieveCeiling);

}  // namespace tanrep
