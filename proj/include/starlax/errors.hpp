#pragma once

#include <stdexcept>
#include <string>

namespace starlax {

/// Inconsistent run-level configuration, e.g. mixing truncation orders.
class ConfigurationError : public std::runtime_error {
public:
    explicit ConfigurationError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument to a constructor or operation (bad leg pair, zero parameter, ...).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace starlax
