#pragma once

#include <stdexcept>
#include <string>

namespace anisogpe {

/// Two fields (or a field and a basis) are laid out on incompatible grids.
class GridMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was handed a field in the wrong representation.
class RepresentationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The computational box cannot hold the requested profile.
class DomainTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Unsupported : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or invalid configuration. `key` names the offending entry.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

}  // namespace anisogpe
