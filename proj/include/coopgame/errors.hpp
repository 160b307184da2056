#ifndef COOPGAME_ERRORS_HPP
#define COOPGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coopgame {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: malformed files, unparsable rationals, missing table entries.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Requested an operation that needs an essential game on an inessential one.
class InessentialGameError : public Error {
public:
    explicit InessentialGameError(const std::string& what) : Error(what) {}
};

// The game is essential but v(N) < sum of singleton values, so the
// normalisation scale would be negative and no (0,1)-normal form exists.
class NotNormalizableError : public Error {
public:
    explicit NotNormalizableError(const std::string& what) : Error(what) {}
};

class WrongPlayerCountError : public Error {
public:
    explicit WrongPlayerCountError(const std::string& what) : Error(what) {}
};

// An operation required a (0,1)-normalised game and got something else.
class NotNormalizedError : public Error {
public:
    explicit NotNormalizedError(const std::string& what) : Error(what) {}
};

// A game violated a documented operation precondition (e.g. super-additivity).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Grid framework would exceed the configured node cap.
class GridTooLargeError : public Error {
public:
    explicit GridTooLargeError(const std::string& what) : Error(what) {}
};

// Extension enumeration or vertex enumeration beyond the configured cap.
class TooLargeError : public Error {
public:
    explicit TooLargeError(const std::string& what) : Error(what) {}
};

// LP with inconsistent dimensions.
class MalformedProblemError : public Error {
public:
    explicit MalformedProblemError(const std::string& what) : Error(what) {}
};

// An internally constructed witness failed its own re-verification.
// Seeing this means a bug in the library, not bad input.
class ConstructionFailedError : public Error {
public:
    explicit ConstructionFailedError(const std::string& what) : Error(what) {}
};

} // namespace coopgame

#endif
