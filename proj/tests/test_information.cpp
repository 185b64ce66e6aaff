#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "photon_ledger/errors.hpp"
#include "photon_ledger/information.hpp"
#include "photon_ledger/kernels.hpp"
#include "photon_ledger/rng.hpp"
#include "photon_ledger/thermo.hpp"

using namespace photon_ledger;
using namespace photon_ledger::information;
using std::numbers::ln2;

namespace {

const UnitSystem nat = UnitSystem::natural();
const UnitSystem si = UnitSystem::si();

constexpr double kH025 = 0.56233514461880835029;  // H(1/4), 50-digit reference

BitFile periodic(const std::string& period, std::size_t length) {
    std::string s;
    while (s.size() < length) s += period;
    s.resize(length);
    return BitFile::from_string(s);
}

}  // namespace

TEST_CASE("bit files") {
    const std::vector<std::byte> bytes{std::byte{0xA0}, std::byte{0x01}};
    CHECK(BitFile::from_bytes(bytes).to_string() == "1010000000000001");
    CHECK(BitFile::from_string("0110").ones() == 2);
    CHECK(BitFile::from_string("0110").inverted().to_string() == "1001");
    CHECK_THROWS_AS((void)BitFile::from_string(""), DomainError);
    CHECK_THROWS_AS((void)BitFile::from_string("01x"), DomainError);
    CHECK_THROWS_AS(BitFile(std::vector<std::uint8_t>{0, 2}), DomainError);
    CHECK_THROWS_AS((void)BitFile::random(8, 1.5, 0), DomainError);
    CHECK(BitFile::random(1000, 0.5, 42) == BitFile::random(1000, 0.5, 42));
    CHECK(BitFile::random(1000, 0.5, 42) != BitFile::random(1000, 0.5, 43));
    CHECK(BitFile::random(64, 0.0, 1).ones() == 0);
    CHECK(BitFile::random(64, 1.0, 1).ones() == 64);
}

TEST_CASE("mixing entropy per slot") {
    CHECK(mixing_entropy_per_slot(0.5) == doctest::Approx(ln2).epsilon(1e-15));
    CHECK(mixing_entropy_per_slot(0.0) == 0.0);
    CHECK(mixing_entropy_per_slot(1.0) == 0.0);
    CHECK(mixing_entropy_per_slot(0.25) == doctest::Approx(kH025).epsilon(1e-14));
    CHECK_THROWS_AS((void)mixing_entropy_per_slot(-0.01), DomainError);
    CHECK_THROWS_AS((void)mixing_entropy_per_slot(1.01), DomainError);
    CHECK_THROWS_AS((void)mixing_entropy_per_slot(std::nan("")), DomainError);
}

TEST_CASE("mixing entropy is symmetric and peaks at one half") {
    SplitMix64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const double p = rng.uniform();
        CHECK(mixing_entropy_per_slot(p) == doctest::Approx(mixing_entropy_per_slot(1.0 - p)).epsilon(1e-12));
        if (std::abs(p - 0.5) > 1e-6) CHECK(mixing_entropy_per_slot(p) < ln2);
    }
}

TEST_CASE("file entropy") {
    CHECK(file_entropy(1000, 0.5, nat) == doctest::Approx(1000 * ln2).epsilon(1e-14));
    CHECK(file_entropy(1000, 0.5, si) == doctest::Approx(1000 * ln2 * si.k_B).epsilon(1e-14));
    CHECK(file_entropy(1, 1.0, nat) == 0.0);
    CHECK(file_entropy(8, 0.25, nat) == doctest::Approx(4.4986811569504668023).epsilon(1e-14));
    CHECK(capacity_entropy(1000, nat) == file_entropy(1000, 0.5, nat));
    CHECK_THROWS_AS((void)file_entropy(0, 0.5, nat), DomainError);
    CHECK_THROWS_AS((void)file_entropy(4, 2.0, nat), DomainError);
}

TEST_CASE("shannon information examples") {
    const auto zeros = BitFile(std::vector<std::uint8_t>(4096, 0));
    for (int k : {1, 2, 8, 30}) CHECK(shannon_information(zeros, k).total_nats == 0.0);

    const auto fair = BitFile::random(1u << 20, 0.5, 2024);
    const auto i1 = shannon_information(fair, 1);
    CHECK(std::abs(i1.per_symbol_nats - ln2) < 0.01);
    CHECK(i1.total_nats == doctest::Approx(i1.per_symbol_nats * (1u << 20)));
    CHECK(i1.order == 1);

    const auto alt = periodic("01", 1024);
    const auto i2 = shannon_information(alt, 2);
    // blocks: 512 x "01", 511 x "10"
    const double h2 = std::log(1023.0) - (512 * std::log(512.0) + 511 * std::log(511.0)) / 1023.0;
    CHECK(i2.per_symbol_nats == doctest::Approx(h2 / 2).epsilon(1e-13));
    CHECK(i2.per_symbol_nats == doctest::Approx(ln2 / 2).epsilon(1e-5));
    const auto i4 = shannon_information(alt, 4);
    CHECK(i4.per_symbol_nats < i2.per_symbol_nats);
    CHECK(i4.per_symbol_nats == doctest::Approx(ln2 / 4).epsilon(1e-5));

    CHECK_THROWS_AS((void)shannon_information(BitFile::from_string("0101"), 5), InsufficientData);
}

TEST_CASE("plug-in information never exceeds ln 2 per symbol and ignores complement") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t L = 16 + rng.next() % 5000;
        const double bias = rng.uniform();
        const auto file = BitFile::random(L, bias, rng.next());
        for (int k : {1, 2, 3, 5, 8, 13}) {
            if (static_cast<std::size_t>(k) > L) continue;
            const auto info = shannon_information(file, k);
            CHECK(info.per_symbol_nats <= ln2);
            CHECK(info.per_symbol_nats >= 0.0);
            CHECK(clausius_margin(capacity_entropy(L, nat), info.total_nats, nat) >= 0.0);
            CHECK(shannon_information(file.inverted(), k).total_nats ==
                  doctest::Approx(info.total_nats).epsilon(1e-12));
        }
    }
}

TEST_CASE("uniform configuration ensemble reproduces ln Omega") {
    // All 2^L files of length L, one L-block each: the pooled block distribution
    // is uniform over Omega = 2^L configurations.
    for (int L = 1; L <= 8; ++L) {
        kernels::BlockCounts pooled{L, 0, {}};
        for (std::uint32_t v = 0; v < (1u << L); ++v) {
            std::vector<std::uint8_t> bits(L);
            for (int i = 0; i < L; ++i) bits[i] = (v >> (L - 1 - i)) & 1u;
            pooled = kernels::merge(pooled, kernels::serial::count_blocks(bits, L));
        }
        CHECK(pooled.entries.size() == (1u << L));
        CHECK(kernels::plugin_entropy(pooled) == doctest::Approx(L * ln2).epsilon(1e-13));
    }
}

TEST_CASE("file energy") {
    const PulseTrain t(BitFile::from_string("10110010"), 1.0, 2.0);
    CHECK(file_energy(t, nat) == 8.0);
    const PulseTrain zeros(BitFile::from_string("00000000"), 1.0, 5.0);
    CHECK(file_energy(zeros, nat) == 0.0);

    const std::size_t L = 1u << 20;
    const PulseTrain fair(BitFile::random(L, 0.5, 31337), 1.0, 1.0);
    CHECK(std::abs(file_energy(fair, nat) - 524288.0) <= 1536.0);

    const PulseTrain s(BitFile::from_string("1"), 1.934e14, 1000.0);
    CHECK(file_energy(s, si) == doctest::Approx(1.28148196701e-16).epsilon(1e-10));
}

TEST_CASE("file temperature conventions") {
    const double L = 4096;
    // Random file: Q = (q/2) L with q = 2, S = L ln 2.
    CHECK(file_temperature(L, L * ln2, EntropyConvention::Bits) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(file_temperature(L, L * ln2, EntropyConvention::Nats) == doctest::Approx(1.0 / ln2).epsilon(1e-15));
    CHECK_THROWS_AS((void)file_temperature(0.0, 0.0, EntropyConvention::Nats), UndefinedTemperature);

    const PulseTrain balanced(periodic("10", 4096), 1.0, 2.0);
    const auto bits = file_thermo_state(balanced, EntropyConvention::Bits, nat);
    CHECK(bits.energy == 4096.0);
    REQUIRE(bits.temperature.has_value());
    CHECK(*bits.temperature == doctest::Approx(1.0).epsilon(1e-14));

    const PulseTrain empty(BitFile::from_string("0000"), 1.0, 2.0);
    const auto none = file_thermo_state(empty, EntropyConvention::Nats, nat);
    CHECK(none.energy == 0.0);
    CHECK(none.entropy == 0.0);
    CHECK_FALSE(none.temperature.has_value());
}

TEST_CASE("clausius margin") {
    const std::size_t L = 1u << 12;
    CHECK(clausius_margin(capacity_entropy(L, nat), L * ln2, nat) == doctest::Approx(0.0));
    CHECK(clausius_margin(capacity_entropy(L, si), 0.0, si) == capacity_entropy(L, si));

    const std::size_t big = 1u << 16;
    const auto biased = BitFile::random(big, 0.25, 4);
    const auto info = shannon_information(biased, 1);
    const double margin = clausius_margin(capacity_entropy(big, nat), info.total_nats, nat);
    // 3 sigma of H(p_hat): |dH/dp| sqrt(p(1-p)/L) with dH/dp = ln 3 at p = 1/4
    const double sigma = std::log(3.0) * std::sqrt(0.25 * 0.75 / big);
    CHECK(std::abs(margin / big - (ln2 - kH025)) <= 3 * sigma);
}

TEST_CASE("entropy deficiency") {
    CHECK(entropy_deficiency(1e300, 5.0, nat) < 1e-290);
    CHECK(entropy_deficiency(0.0, 100.0, nat) == 100.0);
    CHECK(entropy_deficiency(0.0, 100.0, si) == doctest::Approx(100.0 * si.k_B).epsilon(1e-15));
    CHECK(entropy_deficiency(1.0, ln2, nat) == doctest::Approx(0.21269416664174388475).epsilon(1e-14));
    CHECK_THROWS_AS((void)entropy_deficiency(-1.0, 1.0, nat), DomainError);
    CHECK_THROWS_AS((void)entropy_deficiency(1.0, -1.0, nat), DomainError);

    const double I = 123.0;
    double prev = entropy_deficiency(0.0, I, nat);
    for (double n = 1e-6; n < 1e15; n *= 1.7) {
        const double d = entropy_deficiency(n, I, nat);
        CHECK(d < prev);
        CHECK(d >= 0.0);
        CHECK(d <= I);
        // equals I (k_B - S(n))
        if (n < 1e3) CHECK(d == doctest::Approx(I * (1.0 - thermo::pulse_entropy(n, nat))).epsilon(1e-12));
        prev = d;
    }
}
