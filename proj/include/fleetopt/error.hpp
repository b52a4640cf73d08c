#pragma once

#include <stdexcept>
#include <string>

namespace fleetopt {

// Base for all library errors. `kind()` is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message) : Error("validation", message) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("parse", message) {}
};

class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& message) : Error("schema", message) {}
};

class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& message) : Error("infeasible", message) {}
};

}  // namespace fleetopt
