#include <vector>

#include "kernels_detail.hpp"
#include "photon_ledger/kernels.hpp"

namespace photon_ledger::kernels::serial {

BlockCounts count_blocks(std::span<const std::uint8_t> bits, int order) {
    detail::check_block_args(bits, order);
    const std::uint64_t mask = detail::block_mask(order);
    const std::size_t k = static_cast<std::size_t>(order);

    std::uint64_t key = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) key = (key << 1) | bits[i];

    if (order <= detail::kDenseOrderLimit) {
        std::vector<std::uint64_t> table(std::size_t{1} << order, 0);
        for (std::size_t i = k - 1; i < bits.size(); ++i) {
            key = ((key << 1) | bits[i]) & mask;
            ++table[key];
        }
        return detail::from_dense(order, table);
    }

    std::vector<std::uint64_t> keys;
    keys.reserve(bits.size() - k + 1);
    for (std::size_t i = k - 1; i < bits.size(); ++i) {
        key = ((key << 1) | bits[i]) & mask;
        keys.push_back(key);
    }
    return detail::from_keys(order, keys);
}

std::size_t count_ones(std::span<const std::uint8_t> bits) {
    std::size_t n = 0;
    for (auto b : bits) n += b;
    return n;
}

std::size_t count_occupied(std::span<const double> occupancies) {
    std::size_t n = 0;
    for (double x : occupancies) n += (x != 0.0);
    return n;
}

void scale(std::span<double> occupancies, double factor) {
    for (double& x : occupancies) x *= factor;
}

void relevel(std::span<double> occupancies, double level) {
    for (double& x : occupancies) {
        if (x != 0.0) x = level;
    }
}

bool same_pattern(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] != 0.0) != (b[i] != 0.0)) return false;
    }
    return true;
}

}  // namespace photon_ledger::kernels::serial
