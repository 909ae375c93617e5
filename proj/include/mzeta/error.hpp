#pragma once

#include <stdexcept>
#include <string>

namespace mzeta {

/// Malformed or out-of-domain input (bad composition, non-admissible
/// permutation passed to den, pole of a rational function, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would visit more objects than the configured budget.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace mzeta
