#include "photon_ledger/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kernels_detail.hpp"
#include "photon_ledger/errors.hpp"

namespace photon_ledger::kernels {

namespace detail {

void check_block_args(std::span<const std::uint8_t> bits, int order) {
    if (order < 1 || order > kMaxBlockOrder) {
        throw DomainError("block order must be in [1, " + std::to_string(kMaxBlockOrder) +
                          "], got " + std::to_string(order));
    }
    if (bits.size() < static_cast<std::size_t>(order)) {
        throw InsufficientData("need at least " + std::to_string(order) + " bits for order-" +
                               std::to_string(order) + " blocks, have " +
                               std::to_string(bits.size()));
    }
}

BlockCounts from_dense(int order, const std::vector<std::uint64_t>& table) {
    BlockCounts out;
    out.order = order;
    for (std::uint64_t key = 0; key < table.size(); ++key) {
        if (table[key] != 0) {
            out.entries.emplace_back(key, table[key]);
            out.total += table[key];
        }
    }
    return out;
}

BlockCounts from_keys(int order, std::vector<std::uint64_t>& keys) {
    std::sort(keys.begin(), keys.end());
    BlockCounts out;
    out.order = order;
    out.total = keys.size();
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        out.entries.emplace_back(keys[i], j - i);
        i = j;
    }
    return out;
}

}  // namespace detail

BlockCounts merge(const BlockCounts& a, const BlockCounts& b) {
    if (a.order != b.order) {
        throw DomainError("cannot merge block histograms of order " + std::to_string(a.order) +
                          " and " + std::to_string(b.order));
    }
    BlockCounts out;
    out.order = a.order;
    out.total = a.total + b.total;
    out.entries.reserve(a.entries.size() + b.entries.size());
    auto ia = a.entries.begin();
    auto ib = b.entries.begin();
    while (ia != a.entries.end() || ib != b.entries.end()) {
        if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
            out.entries.push_back(*ia++);
        } else if (ia == a.entries.end() || ib->first < ia->first) {
            out.entries.push_back(*ib++);
        } else {
            out.entries.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

double plugin_entropy(const BlockCounts& counts) {
    if (counts.entries.size() <= 1) return 0.0;
    // H = ln N - (1/N) sum c ln c
    const double n = static_cast<double>(counts.total);
    double weighted = 0.0;
    for (const auto& [key, c] : counts.entries) {
        const double cd = static_cast<double>(c);
        weighted += cd * std::log(cd);
    }
    return std::max(0.0, std::log(n) - weighted / n);
}

BlockCounts count_blocks(std::span<const std::uint8_t> bits, int order) {
    return bits.size() >= kParallelThreshold ? omp::count_blocks(bits, order)
                                             : serial::count_blocks(bits, order);
}

std::size_t count_ones(std::span<const std::uint8_t> bits) {
    return bits.size() >= kParallelThreshold ? omp::count_ones(bits) : serial::count_ones(bits);
}

std::size_t count_occupied(std::span<const double> occupancies) {
    return occupancies.size() >= kParallelThreshold ? omp::count_occupied(occupancies)
                                                    : serial::count_occupied(occupancies);
}

void scale(std::span<double> occupancies, double factor) {
    if (occupancies.size() >= kParallelThreshold) {
        omp::scale(occupancies, factor);
    } else {
        serial::scale(occupancies, factor);
    }
}

void relevel(std::span<double> occupancies, double level) {
    if (occupancies.size() >= kParallelThreshold) {
        omp::relevel(occupancies, level);
    } else {
        serial::relevel(occupancies, level);
    }
}

bool same_pattern(std::span<const double> a, std::span<const double> b) {
    return a.size() >= kParallelThreshold ? omp::same_pattern(a, b) : serial::same_pattern(a, b);
}

}  // namespace photon_ledger::kernels
