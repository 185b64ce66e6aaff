#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace photon_ledger {

/// A logical binary file: L >= 1 symbols, each 0 or 1.
class BitFile {
public:
    /// Throws DomainError if `bits` is empty or holds anything other than 0/1.
    explicit BitFile(std::vector<std::uint8_t> bits);

    /// Bytes unpacked most-significant bit first.
    [[nodiscard]] static BitFile from_bytes(std::span<const std::byte> bytes);
    /// A string of '0' and '1' characters.
    [[nodiscard]] static BitFile from_string(std::string_view text);
    /// L independent bits, each 1 with probability `bias`, drawn from SplitMix64(seed).
    [[nodiscard]] static BitFile random(std::size_t length, double bias, std::uint64_t seed);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    [[nodiscard]] std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    [[nodiscard]] std::size_t ones() const;

    /// Global complement.
    [[nodiscard]] BitFile inverted() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitFile&, const BitFile&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Physical realization of a BitFile: one single-mode slot per bit, occupied
/// slots sharing a common occupancy (`level`), empty slots at exactly 0.
class PulseTrain {
public:
    /// Launches `file` with every '1' at `occupancy` photons.
    PulseTrain(const BitFile& file, double frequency, double occupancy);

    [[nodiscard]] std::size_t size() const noexcept { return occupancies_.size(); }
    [[nodiscard]] double frequency() const noexcept { return frequency_; }
    /// Current occupancy of the occupied slots. Tracked even for a file with no ones.
    [[nodiscard]] double level() const noexcept { return level_; }
    [[nodiscard]] std::span<const double> occupancies() const noexcept { return occupancies_; }
    [[nodiscard]] std::size_t occupied() const;

    /// Same train with every occupancy multiplied by `factor` (> 0).
    [[nodiscard]] PulseTrain scaled(double factor) const;
    /// Same pattern with every occupied slot set to `occupancy` (> 0).
    [[nodiscard]] PulseTrain releveled(double occupancy) const;

    /// The bit pattern currently carried (nonzero slot -> 1).
    [[nodiscard]] BitFile pattern() const;
    [[nodiscard]] bool same_pattern(const PulseTrain& other) const;

    friend bool operator==(const PulseTrain&, const PulseTrain&) = default;

private:
    PulseTrain() = default;

    std::vector<double> occupancies_;
    double frequency_ = 0.0;
    double level_ = 0.0;
};

}  // namespace photon_ledger
