#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixdiff {

/// Malformed or invalid experiment configuration; message names the field.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension mismatch between vectors, arrays or network inputs.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Non-finite state encountered while integrating the reverse process.
class SamplerError : public std::runtime_error {
public:
    SamplerError(const std::string& what, std::size_t step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_index(step) {}
    std::size_t step_index;
};

/// Non-finite loss during optimization.
class TrainingError : public std::runtime_error {
public:
    TrainingError(const std::string& what, std::size_t step)
        : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_index(step) {}
    std::size_t step_index;
};

} // namespace mixdiff
