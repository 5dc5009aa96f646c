#pragma once

#include <stdexcept>
#include <string>

namespace gradealg {

/// Bad input: malformed expressions, unknown variables, violated
/// preconditions. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class AmbientMismatch : public InputError {
public:
    AmbientMismatch() : InputError("polynomials live in different rings") {}
    using InputError::InputError;
};

/// A configured bound (ideal power, window, level) was exceeded.
/// Maps to CLI exit code 2.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A requested cohomology degree depends on data outside the computed
/// window and the exact support cannot certify vanishing.
class WindowUnderflow : public LimitExceeded {
public:
    using LimitExceeded::LimitExceeded;
};

}  // namespace gradealg
