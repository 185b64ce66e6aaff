#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "photon_ledger/kernels.hpp"

namespace photon_ledger::kernels::detail {

// Orders up to this use a dense 2^k table; above it keys are sorted.
inline constexpr int kDenseOrderLimit = 16;

void check_block_args(std::span<const std::uint8_t> bits, int order);

[[nodiscard]] constexpr std::uint64_t block_mask(int order) noexcept {
    return order >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << order) - 1);
}

[[nodiscard]] BlockCounts from_dense(int order, const std::vector<std::uint64_t>& table);
[[nodiscard]] BlockCounts from_keys(int order, std::vector<std::uint64_t>& keys);

}  // namespace photon_ledger::kernels::detail
