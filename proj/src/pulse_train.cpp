#include "photon_ledger/pulse_train.hpp"

#include <cmath>
#include <string>

#include "photon_ledger/errors.hpp"
#include "photon_ledger/kernels.hpp"
#include "photon_ledger/rng.hpp"

namespace photon_ledger {

BitFile::BitFile(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw DomainError("a bit file needs at least one symbol");
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] > 1) {
            throw DomainError("symbol " + std::to_string(i) + " is not a bit");
        }
    }
}

BitFile BitFile::from_bytes(std::span<const std::byte> bytes) {
    std::vector<std::uint8_t> bits;
    bits.reserve(bytes.size() * 8);
    for (std::byte b : bytes) {
        const auto v = std::to_integer<unsigned>(b);
        for (int shift = 7; shift >= 0; --shift) bits.push_back((v >> shift) & 1u);
    }
    return BitFile(std::move(bits));
}

BitFile BitFile::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') {
            throw DomainError("character " + std::to_string(i) + " of bit string is not 0 or 1");
        }
        bits.push_back(text[i] == '1');
    }
    return BitFile(std::move(bits));
}

BitFile BitFile::random(std::size_t length, double bias, std::uint64_t seed) {
    if (!(bias >= 0.0 && bias <= 1.0)) {
        throw DomainError("bias must lie in [0, 1], got " + std::to_string(bias));
    }
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> bits(length);
    for (auto& b : bits) b = rng.uniform() < bias;
    return BitFile(std::move(bits));
}

std::size_t BitFile::ones() const { return kernels::count_ones(bits_); }

BitFile BitFile::inverted() const {
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = 1u - bits_[i];
    return BitFile(std::move(out));
}

std::string BitFile::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) out[i] = '1';
    }
    return out;
}

PulseTrain::PulseTrain(const BitFile& file, double frequency, double occupancy)
    : occupancies_(file.size()), frequency_(frequency), level_(occupancy) {
    if (!(frequency > 0.0) || !std::isfinite(frequency)) {
        throw DomainError("pulse frequency must be positive and finite");
    }
    if (!(occupancy > 0.0) || !std::isfinite(occupancy)) {
        throw DomainError("launch occupancy must be positive and finite");
    }
    for (std::size_t i = 0; i < file.size(); ++i) occupancies_[i] = file[i] ? occupancy : 0.0;
}

std::size_t PulseTrain::occupied() const { return kernels::count_occupied(occupancies_); }

PulseTrain PulseTrain::scaled(double factor) const {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw DomainError("scale factor must be positive and finite");
    }
    PulseTrain out = *this;
    kernels::scale(out.occupancies_, factor);
    out.level_ = level_ * factor;
    return out;
}

PulseTrain PulseTrain::releveled(double occupancy) const {
    if (!(occupancy > 0.0) || !std::isfinite(occupancy)) {
        throw DomainError("occupancy must be positive and finite");
    }
    PulseTrain out = *this;
    kernels::relevel(out.occupancies_, occupancy);
    out.level_ = occupancy;
    return out;
}

BitFile PulseTrain::pattern() const {
    std::vector<std::uint8_t> bits(occupancies_.size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = occupancies_[i] != 0.0;
    return BitFile(std::move(bits));
}

bool PulseTrain::same_pattern(const PulseTrain& other) const {
    return kernels::same_pattern(occupancies_, other.occupancies_);
}

}  // namespace photon_ledger
