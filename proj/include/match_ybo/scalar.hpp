#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace match_ybo {

// Exact rational; GMP keeps it canonical after arithmetic.
using Scalar = mpq_class;

Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& x);

// Rational square root if x is the square of a rational; the nonnegative root.
std::optional<Scalar> rational_sqrt(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace match_ybo
