#pragma once

#include <stdexcept>
#include <string>

namespace tp3 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct Singular : Error {
    Singular() : Error("matrix is singular") {}
};

struct Infeasible : Error {
    Infeasible() : Error("linear system is inconsistent") {}
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct NotAutomorphism : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace tp3
