#include <doctest.h>

#include <cmath>

#include "tanrep/errors.hpp"
#include "tanrep/primesieve.hpp"
#include "tanrep/window.hpp"

using namespace tanrep;

namespace {

bool is_prime_trial(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> trial_range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo + 1; n <= hi; ++n)
        if (is_prime_trial(n)) out.push_back(n);
    return out;
}

}  // namespace

TEST_CASE("small ranges") {
    CHECK(sieve_segment(10, 20).primes == std::vector<std::int64_t>{11, 13, 17, 19});
    CHECK(sieve_segment(2.19, 3.03).primes == std::vector<std::int64_t>{3});
    CHECK(sieve_range(1, 10).primes == std::vector<std::int64_t>{2, 3, 5, 7});
    CHECK(sieve_range(0, 2).primes == std::vector<std::int64_t>{2});
    CHECK(sieve_range(2, 3).primes == std::vector<std::int64_t>{3});
    CHECK(sieve_segment(24.5, 28.9).primes.empty());
}

TEST_CASE("k=2 window prime count") {
    const auto w = window_from_index(2, 1.05, 2.0);
    const auto block = sieve_segment(w.delta1, w.delta2);
    const auto oracle = trial_range(static_cast<std::int64_t>(w.delta1), static_cast<std::int64_t>(w.delta2));
    CHECK(block.primes.size() == 63);
    CHECK(block.primes == oracle);
    for (std::size_t i = 0; i < block.primes.size(); ++i)
        CHECK(std::abs(block.logs[i] - std::log(static_cast<double>(block.primes[i]))) <=
              1e-12 * block.logs[i]);
}

TEST_CASE("exhaustive agreement with trial division up to 10^5") {
    const auto all = sieve_range(1, 100000, 3);
    CHECK(all.primes == trial_range(1, 100000));
    CHECK(all.primes.size() == 9592);
    for (std::uint64_t lo : {2ull, 97ull, 1000ull, 65535ull, 99990ull}) {
        for (std::uint64_t hi : {lo + 1, lo + 2, lo + 17, lo + 1000}) {
            if (hi > 100000) continue;
            CHECK(sieve_range(lo, hi).primes ==
                  trial_range(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
        }
    }
}

TEST_CASE("segment splitting invariance") {
    const std::uint64_t a = 1'000'000, b = 3'100'000;
    const auto whole = sieve_range(a, b, 4);
    for (std::uint64_t m : {a + 1, a + 524288, std::uint64_t{2'000'001}, b - 1}) {
        auto left = sieve_range(a, m, 2).primes;
        const auto right = sieve_range(m, b, 1).primes;
        left.insert(left.end(), right.begin(), right.end());
        CHECK(left == whole.primes);
    }
    CHECK(sieve_range(a, b, 1).primes == whole.primes);
}

TEST_CASE("range errors") {
    CHECK_THROWS_AS(sieve_segment(20, 10), Error);
    CHECK_THROWS_AS(sieve_segment(1.0, 10), Error);
    try {
        sieve_segment(10, 20, 1, 15);
        FAIL("expected RangeTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RangeTooLarge);
    }
    try {
        sieve_range(5, 5);
        FAIL("expected InvalidRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidRange);
    }
}
