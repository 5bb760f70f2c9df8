#pragma once

#include <stdexcept>
#include <string>

namespace modsplit {

// Failure taxonomy, mapped to CLI exit codes in tools/modsplit_main.cpp.
enum class ErrorKind {
    BadInput,               // malformed config, unknown case name, weight outside alcove
    Overflow,               // checked 64-bit arithmetic overflowed (logic bug or absurd input)
    Inconsistent,           // equations have no solution over non-negative integers
    Ambiguous,              // more than one solution survives all constraints
    Io,                     // filesystem failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace modsplit
