#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace diffree {

// Base error carrying a stable machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Bad input or a configured limit; the CLI maps these to exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A proved inequality failed to hold. This always indicates an implementation
// bug, never bad input; the CLI maps these to exit code 2.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

}  // namespace diffree
