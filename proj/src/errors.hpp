#pragma once

#include <stdexcept>
#include <string>

namespace skillkit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A record violated the skill/trajectory/run-log schema. `path` points at the
/// first offending field (e.g. "action_steps[1].params.text").
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& what)
        : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Parameter substitution failure.
class SubstitutionError : public Error {
public:
    enum class Kind { MissingArgument, UnknownParameter, TypeMismatch };

    SubstitutionError(Kind kind, std::string param, const std::string& what)
        : Error(what), kind_(kind), param_(std::move(param)) {}
    Kind kind() const { return kind_; }
    const std::string& param() const { return param_; }

private:
    Kind kind_;
    std::string param_;
};

class UrlError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// LLM / embedding endpoint failures (including missing replay fixtures).
class ClientError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace skillkit
