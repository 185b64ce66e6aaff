#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernels_detail.hpp"
#include "photon_ledger/kernels.hpp"

namespace photon_ledger::kernels::omp {

namespace {

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int thread_id() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

}  // namespace

BlockCounts count_blocks(std::span<const std::uint8_t> bits, int order) {
    detail::check_block_args(bits, order);
    const std::uint64_t mask = detail::block_mask(order);
    const std::size_t k = static_cast<std::size_t>(order);
    const std::size_t windows = bits.size() - k + 1;
    const bool dense = order <= detail::kDenseOrderLimit;

    const int nt = thread_count();
    std::vector<std::vector<std::uint64_t>> local(static_cast<std::size_t>(nt));

#pragma omp parallel num_threads(nt)
    {
        const auto t = static_cast<std::size_t>(thread_id());
        const std::size_t nthreads = static_cast<std::size_t>(nt);
        // Contiguous chunk of window start positions per thread.
        const std::size_t begin = windows * t / nthreads;
        const std::size_t end = windows * (t + 1) / nthreads;
        auto& mine = local[t];
        if (dense) {
            mine.assign(std::size_t{1} << order, 0);
        } else {
            mine.reserve(end - begin);
        }
        if (begin < end) {
            std::uint64_t key = 0;
            for (std::size_t i = begin; i + 1 < begin + k; ++i) key = (key << 1) | bits[i];
            for (std::size_t w = begin; w < end; ++w) {
                key = ((key << 1) | bits[w + k - 1]) & mask;
                if (dense) {
                    ++mine[key];
                } else {
                    mine.push_back(key);
                }
            }
        }
    }

    if (dense) {
        std::vector<std::uint64_t> table(std::size_t{1} << order, 0);
        for (const auto& part : local) {
            for (std::size_t i = 0; i < part.size(); ++i) table[i] += part[i];
        }
        return detail::from_dense(order, table);
    }
    std::vector<std::uint64_t> keys;
    keys.reserve(windows);
    for (const auto& part : local) keys.insert(keys.end(), part.begin(), part.end());
    return detail::from_keys(order, keys);
}

std::size_t count_ones(std::span<const std::uint8_t> bits) {
    std::size_t n = 0;
    const auto size = static_cast<std::ptrdiff_t>(bits.size());
#pragma omp parallel for reduction(+ : n) schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) n += bits[static_cast<std::size_t>(i)];
    return n;
}

std::size_t count_occupied(std::span<const double> occupancies) {
    std::size_t n = 0;
    const auto size = static_cast<std::ptrdiff_t>(occupancies.size());
#pragma omp parallel for reduction(+ : n) schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
        n += (occupancies[static_cast<std::size_t>(i)] != 0.0);
    }
    return n;
}

void scale(std::span<double> occupancies, double factor) {
    double* data = occupancies.data();
    const auto size = static_cast<std::ptrdiff_t>(occupancies.size());
#pragma omp parallel for simd schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) data[i] *= factor;
}

void relevel(std::span<double> occupancies, double level) {
    double* data = occupancies.data();
    const auto size = static_cast<std::ptrdiff_t>(occupancies.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
        if (data[i] != 0.0) data[i] = level;
    }
}

bool same_pattern(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) return false;
    std::size_t mismatches = 0;
    const auto size = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for reduction(+ : mismatches) schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
        const auto u = static_cast<std::size_t>(i);
        mismatches += ((a[u] != 0.0) != (b[u] != 0.0));
    }
    return mismatches == 0;
}

}  // namespace photon_ledger::kernels::omp
