#pragma once

#include <stdexcept>
#include <string>

namespace lockcalc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (bad week index, invalid parameter).
class DomainError : public Error {
public:
    using Error::Error;
};

// A computation produced a non-finite intermediate.
class NumericError : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class ConfigParseError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Names the offending field so the message can be shown verbatim.
class ConfigValidationError : public ConfigError {
public:
    ConfigValidationError(std::string field, const std::string& reason)
        : ConfigError(field + ": " + reason), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ConfigUnknownKeyError : public ConfigError {
public:
    explicit ConfigUnknownKeyError(std::string key)
        : ConfigError("unknown key '" + key + "'"), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

}  // namespace lockcalc
