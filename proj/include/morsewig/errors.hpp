#ifndef MORSEWIG_ERRORS_HPP
#define MORSEWIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace morsewig {

// Base class for all library failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of a routine.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation requested at (or too close to) a pole.
class PoleError : public Error {
public:
    PoleError(const std::string& msg, long pole_index)
        : Error(msg), pole(pole_index) {}
    long pole;  // the non-positive integer the argument collided with
};

// An iteration or series failed to reach its tolerance.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// Parameter combination makes a closed form degenerate (e.g. coincident
// exponents that would need a logarithmic solution).
class DegenerateParameterError : public Error {
public:
    explicit DegenerateParameterError(const std::string& msg) : Error(msg) {}
};

// 2ik/alpha hit an integer: the two exponential solutions collide and the
// generic factor formula is invalid.
class ResonanceError : public DegenerateParameterError {
public:
    explicit ResonanceError(const std::string& msg)
        : DegenerateParameterError(msg) {}
};

// Contour placement or truncation failed.
class ContourError : public Error {
public:
    explicit ContourError(const std::string& msg) : Error(msg) {}
};

// Grid/field shape mismatch or use of an unnormalized field where a
// normalized one is required.
class FieldError : public Error {
public:
    explicit FieldError(const std::string& msg) : Error(msg) {}
};

}  // namespace morsewig

#endif
