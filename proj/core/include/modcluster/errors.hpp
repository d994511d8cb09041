#pragma once

#include <stdexcept>
#include <string>

namespace modcluster {

/// Base class for all errors raised by this library. The message always
/// starts with a stable error name ("NoEdges: ...") so callers can match on
/// it without a taxonomy of catch clauses.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class NoEdgesError : public Error {
public:
    explicit NoEdgesError(const std::string& detail) : Error("NoEdges: " + detail) {}
};

class MalformedLineError : public Error {
public:
    explicit MalformedLineError(const std::string& detail) : Error("MalformedLine: " + detail) {}
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& detail)
        : Error("DimensionMismatch: " + detail) {}
};

class IndexOutOfRangeError : public Error {
public:
    explicit IndexOutOfRangeError(const std::string& detail)
        : Error("IndexOutOfRange: " + detail) {}
};

class EmptySubsetError : public Error {
public:
    explicit EmptySubsetError(const std::string& detail) : Error("EmptySubset: " + detail) {}
};

class TooManyVariablesError : public Error {
public:
    explicit TooManyVariablesError(const std::string& detail)
        : Error("TooManyVariables: " + detail) {}
};

class TooManyQubitsError : public Error {
public:
    explicit TooManyQubitsError(const std::string& detail)
        : Error("TooManyQubits: " + detail) {}
};

}  // namespace modcluster
