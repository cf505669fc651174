#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tanrep {

// Worker count: TANREP_THREADS if set and positive, else hardware concurrency.
std::size_t default_threads();

// Splits [0, n) into `parts` contiguous chunks (fewer if n is small) and runs
// fn(begin, end, chunk_index) for each. Chunk boundaries depend only on n and
// parts, never on scheduling.
void parallel_chunks(std::size_t n, std::size_t parts,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

// Blocked pairwise summation. The reduction tree depends only on the length
// of the input, so equal inputs give bit-identical sums.
double pairwise_sum(std::span<const double> xs);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> xs);

}  // namespace tanrep
