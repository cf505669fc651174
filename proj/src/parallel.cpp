#include "tanrep/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

namespace tanrep {

std::size_t default_threads() {
    if (const char* env = std::getenv("TANREP_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_chunks(std::size_t n, std::size_t parts,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    parts = std::clamp<std::size_t>(parts, 1, n);
    const std::size_t step = (n + parts - 1) / parts;
    if (parts == 1) {
        fn(0, n, 0);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(parts);
    for (std::size_t p = 0; p < parts; ++p) {
        const std::size_t b = p * step;
        const std::size_t e = std::min(n, b + step);
        if (b >= e) break;
        workers.emplace_back([&, b, e, p] {
            try {
                fn(b, e, p);
            } catch (...) {
                errors[p] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

namespace {

constexpr std::size_t kBlock = 128;

template <typename T>
T pairwise(const T* xs, std::size_t n) {
    if (n <= kBlock) {
        T acc{};
        for (std::size_t i = 0; i < n; ++i) acc += xs[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise(xs, half) + pairwise(xs + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> xs) { return pairwise(xs.data(), xs.size()); }

std::complex<double> pairwise_sum(std::span<const std::complex<double>> xs) {
    return pairwise(xs.data(), xs.size());
}

}  // namespace tanrep
