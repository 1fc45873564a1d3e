// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_ERRORS_HPP
#define MIXEDFOREST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mixedforest {

/// Malformed input: out-of-range identifiers, loops, mismatched graphs.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates an operation's precondition, or a
/// request that is provably infeasible (e.g. an impossible root exchange).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance exceeds the configured exhaustive-search budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proven invariant failed at runtime. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalError("invariant violated: " + what);
}

}  // namespace mixedforest

#endif
