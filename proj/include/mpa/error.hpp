#pragma once

#include <stdexcept>
#include <string>

namespace mpa {

/// Base class of every diagnostic thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a token, stream, or automaton would violate a type invariant.
class ValidationError : public Error {
public:
    enum class Kind {
        InvalidToken,
        EmptyStates,
        EmptyAlphabet,
        EmptyInitials,
        UnknownState,
        UnknownCharacter,
        EmptyStream,
    };

    ValidationError(Kind kind, std::string offending, const std::string& message)
        : Error(message), kind_(kind), offending_(std::move(offending)) {}

    Kind kind() const noexcept { return kind_; }
    /// The token that caused the failure, empty if there is none.
    const std::string& offending() const noexcept { return offending_; }

private:
    Kind kind_;
    std::string offending_;
};

} // namespace mpa
