#pragma once

#include <stdexcept>
#include <string>

namespace ssumm {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: unparseable edge list, bad summary file, invalid CLI value.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// A precondition on an API call was violated (bad argument, dead supernode, ...).
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

/// The requested bit budget cannot be met even after dropping every superedge.
class BudgetInfeasible : public Error {
public:
    BudgetInfeasible(const std::string& msg, double floor_bits, double target_bits)
        : Error(msg), floor_bits(floor_bits), target_bits(target_bits) {}

    double floor_bits;   ///< smallest representable size, in bits
    double target_bits;  ///< the budget that could not be met
};

}  // namespace ssumm
