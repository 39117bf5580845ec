#pragma once

#include <stdexcept>
#include <string>

namespace stpfool {

/// Malformed or out-of-range input (bad tree, node outside [n], mixed n, ...).
class InputError : public std::invalid_argument
{
public:
    explicit InputError(const std::string & what) : std::invalid_argument(what) {}
};

/// An operation was called with its precondition unmet.
class ContractError : public std::logic_error
{
public:
    explicit ContractError(const std::string & what) : std::logic_error(what) {}
};

/// Request refused because it would enumerate or search at infeasible scale.
class ScaleError : public std::runtime_error
{
public:
    explicit ScaleError(const std::string & what) : std::runtime_error(what) {}
};

} // namespace stpfool
