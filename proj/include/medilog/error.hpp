#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace medilog {

/// Base for every error raised by the library. Callers that only need to
/// distinguish "bad input" from "bug" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// Mediative operator called with weights violating normalization.
class ParameterError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
        : Error(format(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string format(std::size_t offset, const std::vector<std::string>& expected,
                              const std::string& found) {
        std::string msg = "parse error at byte " + std::to_string(offset) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        msg += ", found " + found;
        return msg;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

class UnboundAtom : public Error {
public:
    explicit UnboundAtom(const std::string& name)
        : Error("unbound atom '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class TooManyAtoms : public Error {
public:
    using Error::Error;
};

class EmptyProjection : public Error {
public:
    using Error::Error;
};

class EmptySet : public Error {
public:
    using Error::Error;
};

class WeightMismatch : public Error {
public:
    using Error::Error;
};

class EmptyFamily : public Error {
public:
    using Error::Error;
};

class MissingGranule : public Error {
public:
    using Error::Error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NonRealTrace : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Scenario file does not match the schema. `path()` is a JSON-pointer-like
/// location of the offending field.
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace medilog
