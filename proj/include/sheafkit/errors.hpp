#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sheafkit {

/// Mismatched shapes or malformed values passed across a module boundary.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Flow network whose in/out volume rates disagree at an internal vertex.
class ConservationViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pipe with rate <= 0; mixing weights need a positive rate total.
class NonpositiveRate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal assertion: a restriction failed to carry a facewise kernel into
/// the downstream kernel. Only reachable with corrupted morphism data.
class KernelNotPreserved : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Internal assertion: the facewise image of a section failed the section
/// test in the target sheaf. Only reachable if commutativity was bypassed.
class ImageNotSection : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An analysis was asked to run on data that fails validation.
class ValidationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Interchange-format error carrying a JSON-pointer-like location.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, const std::string& location)
        : std::runtime_error(message + " (at " + (location.empty() ? "$" : location) + ")"),
          message_(message),
          location_(location.empty() ? "$" : location) {}

    const std::string& message() const noexcept { return message_; }
    const std::string& location() const noexcept { return location_; }

private:
    std::string message_;
    std::string location_;
};

}  // namespace sheafkit
