#pragma once

// Data-parallel inner loops of the toolkit. Every kernel exists twice: a plain
// serial reference in `kernels::serial` and an OpenMP version in
// `kernels::omp`. The unqualified entry points pick the OpenMP path for inputs
// large enough to amortize a parallel region. Results never depend on the path
// or on the thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace photon_ledger::kernels {

inline constexpr int kMaxBlockOrder = 64;

/// Histogram of overlapping k-bit blocks. Entries are sorted by key and hold
/// only nonzero counts, so two histograms of the same data compare equal
/// regardless of how they were assembled.
struct BlockCounts {
    int order = 1;
    std::uint64_t total = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

    friend bool operator==(const BlockCounts&, const BlockCounts&) = default;
};

/// Sum of two histograms of the same order. Associative and commutative.
[[nodiscard]] BlockCounts merge(const BlockCounts& a, const BlockCounts& b);

/// Plug-in entropy -sum p ln p of the block distribution, in nats.
[[nodiscard]] double plugin_entropy(const BlockCounts& counts);

namespace serial {
[[nodiscard]] BlockCounts count_blocks(std::span<const std::uint8_t> bits, int order);
[[nodiscard]] std::size_t count_ones(std::span<const std::uint8_t> bits);
[[nodiscard]] std::size_t count_occupied(std::span<const double> occupancies);
void scale(std::span<double> occupancies, double factor);
void relevel(std::span<double> occupancies, double level);
[[nodiscard]] bool same_pattern(std::span<const double> a, std::span<const double> b);
}  // namespace serial

namespace omp {
[[nodiscard]] BlockCounts count_blocks(std::span<const std::uint8_t> bits, int order);
[[nodiscard]] std::size_t count_ones(std::span<const std::uint8_t> bits);
[[nodiscard]] std::size_t count_occupied(std::span<const double> occupancies);
void scale(std::span<double> occupancies, double factor);
void relevel(std::span<double> occupancies, double level);
[[nodiscard]] bool same_pattern(std::span<const double> a, std::span<const double> b);
}  // namespace omp

/// Inputs shorter than this stay on the serial path.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

[[nodiscard]] BlockCounts count_blocks(std::span<const std::uint8_t> bits, int order);
[[nodiscard]] std::size_t count_ones(std::span<const std::uint8_t> bits);
[[nodiscard]] std::size_t count_occupied(std::span<const double> occupancies);
void scale(std::span<double> occupancies, double factor);
void relevel(std::span<double> occupancies, double level);
[[nodiscard]] bool same_pattern(std::span<const double> a, std::span<const double> b);

}  // namespace photon_ledger::kernels
