#pragma once
#include <stdexcept>
#include <string>

namespace abmod {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by an exactly-zero rational function.
struct division_by_zero_error : error {
    using error::error;
};

/// Evaluation of a rational function at a root of its denominator.
struct pole_error : error {
    using error::error;
};

struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

/// Family outside the supported class (e.g. infinite staircase).
struct unsupported_family_error : error {
    using error::error;
};

/// Configurable computation cap exceeded (S-pair budget, saturation cap).
struct budget_exceeded_error : error {
    using error::error;
};

/// b_inverse applied to a class with nonzero b^0 part.
struct not_in_image_error : error {
    using error::error;
};

/// b^{-1}nabla applied to a class outside P.
struct not_in_p_error : error {
    using error::error;
};

struct internal_error : error {
    using error::error;
};

}  // namespace abmod
