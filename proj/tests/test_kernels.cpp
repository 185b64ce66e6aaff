#include <doctest.h>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "photon_ledger/errors.hpp"
#include "photon_ledger/kernels.hpp"
#include "photon_ledger/rng.hpp"

using namespace photon_ledger;
using namespace photon_ledger::kernels;

namespace {

std::vector<std::uint8_t> random_bits(std::size_t n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) b = rng.uniform() < p;
    return out;
}

// Oracle: count blocks as strings.
std::map<std::string, std::uint64_t> brute_force_blocks(const std::vector<std::uint8_t>& bits, int k) {
    std::map<std::string, std::uint64_t> out;
    for (std::size_t i = 0; i + k <= bits.size(); ++i) {
        std::string key;
        for (int j = 0; j < k; ++j) key += bits[i + j] ? '1' : '0';
        ++out[key];
    }
    return out;
}

std::uint64_t key_of(const std::string& s) {
    std::uint64_t v = 0;
    for (char c : s) v = (v << 1) | (c == '1');
    return v;
}

}  // namespace

TEST_CASE("block counts match brute force for dense and sparse orders") {
    for (int k : {1, 2, 3, 8, 16, 17, 33, 64}) {
        const auto bits = random_bits(5000, 0.3, 1000 + k);
        const auto oracle = brute_force_blocks(bits, k);
        const auto counts = serial::count_blocks(bits, k);
        CHECK(counts.order == k);
        CHECK(counts.total == bits.size() - k + 1);
        REQUIRE(counts.entries.size() == oracle.size());
        auto it = counts.entries.begin();
        std::map<std::uint64_t, std::uint64_t> by_key;
        for (const auto& [s, c] : oracle) by_key[key_of(s)] = c;
        for (const auto& [key, c] : by_key) {
            CHECK(it->first == key);
            CHECK(it->second == c);
            ++it;
        }
    }
}

TEST_CASE("OpenMP kernels agree with the serial reference") {
    const auto bits = random_bits(200003, 0.5, 7);
    for (int k : {1, 4, 8, 12, 20, 40}) {
        CHECK(omp::count_blocks(bits, k) == serial::count_blocks(bits, k));
        CHECK(count_blocks(bits, k) == serial::count_blocks(bits, k));
    }
    CHECK(omp::count_ones(bits) == serial::count_ones(bits));

    std::vector<double> occ(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) occ[i] = bits[i] ? 12345.0 : 0.0;
    CHECK(omp::count_occupied(occ) == serial::count_occupied(occ));
    CHECK(omp::count_occupied(occ) == serial::count_ones(bits));

    auto a = occ;
    auto b = occ;
    serial::scale(a, 0.125);
    omp::scale(b, 0.125);
    CHECK(a == b);
    CHECK(omp::same_pattern(a, occ));
    CHECK(serial::same_pattern(a, occ));

    serial::relevel(a, 3.0);
    omp::relevel(b, 3.0);
    CHECK(a == b);

    b[bits.size() / 2] = b[bits.size() / 2] == 0.0 ? 1.0 : 0.0;
    CHECK_FALSE(omp::same_pattern(a, b));
    CHECK_FALSE(serial::same_pattern(a, b));
    CHECK_FALSE(serial::same_pattern(a, std::span<const double>(b).first(10)));
}

#ifdef _OPENMP
TEST_CASE("block counts do not depend on the thread count") {
    const auto bits = random_bits(100000, 0.4, 99);
    const auto reference = serial::count_blocks(bits, 6);
    const auto sparse_reference = serial::count_blocks(bits, 24);
    const int saved = omp_get_max_threads();
    for (int threads : {1, 2, 3, 7, 16}) {
        omp_set_num_threads(threads);
        CHECK(omp::count_blocks(bits, 6) == reference);
        CHECK(omp::count_blocks(bits, 24) == sparse_reference);
    }
    omp_set_num_threads(saved);
}
#endif

TEST_CASE("merge is an associative, commutative sum") {
    const auto x = random_bits(3000, 0.5, 1);
    const auto y = random_bits(2000, 0.2, 2);
    const auto z = random_bits(1000, 0.9, 3);
    for (int k : {3, 20}) {
        const auto a = serial::count_blocks(x, k);
        const auto b = serial::count_blocks(y, k);
        const auto c = serial::count_blocks(z, k);
        CHECK(merge(merge(a, b), c) == merge(a, merge(b, c)));
        CHECK(merge(a, b) == merge(b, a));
        CHECK(merge(a, b).total == a.total + b.total);
    }
    CHECK_THROWS_AS((void)merge(serial::count_blocks(x, 1), serial::count_blocks(x, 2)), DomainError);
}

TEST_CASE("plug-in entropy") {
    BlockCounts uniform{2, 400, {{0, 100}, {1, 100}, {2, 100}, {3, 100}}};
    CHECK(plugin_entropy(uniform) == doctest::Approx(std::log(4.0)).epsilon(1e-14));
    BlockCounts single{3, 50, {{5, 50}}};
    CHECK(plugin_entropy(single) == 0.0);
    BlockCounts skew{1, 4, {{0, 1}, {1, 3}}};
    const double p = 0.25;
    CHECK(plugin_entropy(skew) == doctest::Approx(-(p * std::log(p) + (1 - p) * std::log(1 - p))).epsilon(1e-14));
    CHECK(plugin_entropy(BlockCounts{}) == 0.0);
}

TEST_CASE("block argument errors") {
    const std::vector<std::uint8_t> bits{1, 0, 1};
    CHECK_THROWS_AS((void)serial::count_blocks(bits, 0), DomainError);
    CHECK_THROWS_AS((void)serial::count_blocks(bits, 65), DomainError);
    CHECK_THROWS_AS((void)serial::count_blocks(bits, 4), InsufficientData);
    CHECK_THROWS_AS((void)omp::count_blocks(bits, 4), InsufficientData);
    CHECK(serial::count_blocks(bits, 3).total == 1);
}
