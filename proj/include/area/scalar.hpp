#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace area {

/// Exact rational number. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Scalar = mpq_class;

std::string to_string(const Scalar& value);

/// Parses "3", "-7", "1/2" or a decimal literal such as "0.25".
Scalar parse_scalar(std::string_view text);

int sign(const Scalar& value);

/// Exact square root when `value` is the square of a rational.
bool exact_sqrt(const Scalar& value, Scalar& root);

}  // namespace area
