#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace photon_ledger {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Temperature requested for a state that has none (empty mode, zero entropy).
class UndefinedTemperature : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Too few symbols for the requested block order.
class InsufficientData : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two pulse trains that should describe the same file do not line up.
class AuditError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A link simulation could not continue; carries the index of the failing stage.
class SimulationError : public std::runtime_error {
public:
    SimulationError(std::size_t stage, const std::string& what)
        : std::runtime_error("stage " + std::to_string(stage) + ": " + what), stage_(stage) {}

    [[nodiscard]] std::size_t stage() const noexcept { return stage_; }

private:
    std::size_t stage_;
};

/// Configuration document failed validation; `path()` is a JSON pointer to the bad field.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string path, const std::string& what)
        : std::invalid_argument(path + ": " + what), path_(std::move(path)) {}

    [[nodiscard]] const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace photon_ledger
