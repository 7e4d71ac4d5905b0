#pragma once

#include <stdexcept>
#include <string>

namespace colorcomp {

// Error categories shared with the C API status codes.
enum class ErrorKind {
    domain,        // argument outside the defined range
    shape,         // length/arity mismatch
    cap,           // enumeration would exceed the object cap
    insufficient,  // fewer input terms than requested output terms
    nonintegral,   // exact-rational result requested as integers
    parse,         // malformed textual input
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace colorcomp
