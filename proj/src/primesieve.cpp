#include "tanrep/primesieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tanrep/errors.hpp"
#include "tanrep/parallel.hpp"

namespace tanrep {

namespace {

constexpr std::uint64_t kSegmentSpan = std::uint64_t{1} << 19;

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint32_t> small_odd_primes(std::uint64_t limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 3; i <= limit; i += 2) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = 1;
    }
    return out;
}

// Odd primes in [lo, hi), lo odd.
void sieve_odd_block(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& base,
                     std::vector<std::int64_t>& out) {
    const std::uint64_t count = (hi - lo + 1) / 2;  // odd numbers lo, lo+2, ...
    std::vector<char> composite(count, 0);
    for (const std::uint64_t p : base) {
        if (p * p >= hi) break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        if (start % 2 == 0) start += p;
        for (std::uint64_t j = start; j < hi; j += 2 * p) composite[(j - lo) / 2] = 1;
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t v = lo + 2 * i;
        if (v >= hi) break;
        if (!composite[i] && v > 1) out.push_back(static_cast<std::int64_t>(v));
    }
}

}  // namespace

PrimeBlock sieve_range(std::uint64_t lo, std::uint64_t hi, std::size_t threads,
                       std::uint64_t ceiling) {
    if (lo >= hi) throw Error(ErrorKind::InvalidRange, "empty range (" + std::to_string(lo) +
                                                           ", " + std::to_string(hi) + "]");
    if (hi > ceiling) throw Error(ErrorKind::RangeTooLarge, "upper bound exceeds sieve ceiling");

    PrimeBlock block;
    block.lo = lo;
    block.hi = hi;
    if (lo < 2 && hi >= 2) block.primes.push_back(2);

    // Odd candidates in (lo, hi] as the half-open [first, hi + 1).
    std::uint64_t first = std::max<std::uint64_t>(lo + 1, 3);
    if (first % 2 == 0) ++first;
    const std::uint64_t end = hi + 1;
    if (first < end) {
        const auto base = small_odd_primes(isqrt(hi));
        const std::uint64_t segments = (end - first + kSegmentSpan - 1) / kSegmentSpan;
        std::vector<std::vector<std::int64_t>> parts(segments);
        if (threads == 0) threads = default_threads();
        parallel_chunks(segments, threads, [&](std::size_t b, std::size_t e, std::size_t) {
            for (std::size_t s = b; s < e; ++s) {
                const std::uint64_t seg_lo = first + s * kSegmentSpan;
                const std::uint64_t seg_hi = std::min(end, seg_lo + kSegmentSpan);
                sieve_odd_block(seg_lo, seg_hi, base, parts[s]);
            }
        });
        for (const auto& part : parts) block.primes.insert(block.primes.end(), part.begin(), part.end());
    }
    block.logs.reserve(block.primes.size());
    for (const auto p : block.primes) block.logs.push_back(std::log(static_cast<double>(p)));
    return block;
}

PrimeBlock sieve_segment(double a, double b, std::size_t threads, std::uint64_t ceiling) {
    if (!(a >= 2.0) || !(a < b))
        throw Error(ErrorKind::InvalidRange, "sieve_segment requires 2 <= a < b");
    if (b > static_cast<double>(ceiling))
        throw Error(ErrorKind::RangeTooLarge, "upper bound exceeds sieve ceiling");
    const auto lo = static_cast<std::uint64_t>(std::floor(a));
    const auto hi = static_cast<std::uint64_t>(std::floor(b));
    if (lo == hi) {
        PrimeBlock empty;
        empty.lo = lo;
        empty.hi = hi;
        return empty;
    }
    return sieve_range(lo, hi, threads, ceiling);
}

}  // namespace tanrep
