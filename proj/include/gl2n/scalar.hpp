#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gl2n {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal digits only). Throws InvalidArgument.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

}  // namespace gl2n
