#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph input: duplicate identifiers, dangling edge endpoints, bad JSON.
class GraphError : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& name)
        : Error("unknown vertex '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Two values built over different graphs were combined.
class GraphMismatch : public Error {
public:
    GraphMismatch() : Error("vertex sets belong to different graphs") {}
};

class CutoffExceeded : public Error {
public:
    using Error::Error;
};

// A theorem-backed postcondition failed. Always a bug, never a user error.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class OracleError : public Error {
public:
    using Error::Error;
};

}  // namespace lpa
