#pragma once

#include <stdexcept>
#include <string>

namespace unipy {

/// Base class for every failure the library reports by exception.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PackError : public Error {
public:
    enum class Kind { NotFound, Parse, Schema, Invalid };

    PackError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class IoError : public Error {
public:
    using Error::Error;
};

class InterpreterNotFound : public Error {
public:
    using Error::Error;
};

class SpawnError : public Error {
public:
    using Error::Error;
};

class EmptyCorpus : public Error {
public:
    using Error::Error;
};

class PreflightFailure : public Error {
public:
    using Error::Error;
};

}  // namespace unipy
