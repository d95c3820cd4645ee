#pragma once

#include <stdexcept>
#include <string>

namespace gibs {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad degree bound, dimension
/// mismatch, out-of-range class index, ...).
class argument_error : public error {
public:
    using error::error;
};

/// Input text could not be parsed; carries 1-based line/column of the offence.
class parse_error : public error {
public:
    parse_error(const std::string& msg, int line, int col)
        : error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(col) + ")"),
          line_(line), col_(col) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return col_; }

private:
    int line_ = 0;
    int col_ = 0;
};

/// The moment constraints are inconsistent (the ideal contains a nonzero
/// constant) or the feasible region is empty.
class infeasible_error : public error {
public:
    using error::error;
};

// unstable_rank_error (restart rank disagreement) lives in sdp.hpp so it can
// carry both solver solutions; resource_limit_error lives in table.hpp so it
// can carry the partial dimension table.

} // namespace gibs
