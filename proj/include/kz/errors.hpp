#pragma once

#include <stdexcept>
#include <string>

namespace kz {

// Base for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Exact arithmetic: division by a zero scalar / zero rational function.
struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& what) : error(what) {}
};

// Evaluation of a rational function at one of its poles.
struct pole_error : error {
    std::string location; // serialized "p/q" of the pole
    explicit pole_error(std::string loc)
        : error("evaluation at pole z = " + loc), location(std::move(loc)) {}
};

// Incompatible matrix shapes.
struct dimension_error : error {
    explicit dimension_error(const std::string& what) : error(what) {}
};

// Inversion of a matrix whose determinant is identically zero.
struct singular_matrix_error : error {
    explicit singular_matrix_error(const std::string& what) : error(what) {}
};

// Bad user-facing input: violated preconditions, malformed documents.
// CLI maps this to exit code 2.
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

// A construction invariant failed; indicates a bug, not bad input.
// CLI maps this to exit code 3.
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

} // namespace kz
