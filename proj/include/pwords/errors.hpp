#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pwords {

/// A symbol outside [0, d], or a dimension outside [1, 9].
struct InvalidAlphabetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A symbol sequence that is not a valid partition word.
struct InvalidWordError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A part array violating monotonicity, downward closure, or positivity.
struct InvalidPartitionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Precondition or usage violation (bad n, mismatched vertex sets, ...).
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A time budget ran out; carries how far the computation got.
struct BudgetExceededError : std::runtime_error {
    BudgetExceededError(const std::string &what, std::size_t partial)
        : std::runtime_error(what), partial_count(partial) {}
    std::size_t partial_count = 0;
};

/// A sample unusable for fitting (too small or zero variance).
struct DegenerateSampleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pwords
