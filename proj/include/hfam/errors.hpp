#pragma once

#include <stdexcept>
#include <string>

namespace hfam {

/// Raised when an operation would exceed its configured enumeration budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation contradicts a proved guarantee. Always a bug in
/// this library, never a property of the input.
class defect_error : public std::logic_error {
public:
    explicit defect_error(const std::string& what) : std::logic_error(what) {}
};

/// Raised on malformed input text (family files, sweep configs).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

}  // namespace hfam
