#pragma once

#include <stdexcept>
#include <string>

namespace tqre {

// A requested target cannot be met by any parameter choice.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fit data does not identify the requested parameters.
class UnderdeterminedError : public std::runtime_error {
public:
    explicit UnderdeterminedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Config file problem; message names the offending section/key.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace tqre
