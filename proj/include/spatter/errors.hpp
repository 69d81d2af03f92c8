#pragma once

#include <stdexcept>
#include <string>

namespace spatter {

/// Bad flags, malformed config, schema violations. CLI exit code 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or inconsistent data: failed bundle invariants, missing inputs,
/// malformed CSV rows, imbalanced assembly. CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spatter
