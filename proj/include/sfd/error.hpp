#pragma once

#include <stdexcept>
#include <string>

namespace sfd {

// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a computation would exceed the enumeration budget.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Raised when an optional on-disk dataset is required but absent.
class MissingDataset : public Error {
public:
    explicit MissingDataset(const std::string& msg) : Error(msg) {}
};

// Raised on malformed dataset files (carries a line number where known).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace sfd
