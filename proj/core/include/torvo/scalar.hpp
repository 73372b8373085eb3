#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace torvo {

using Scalar = mpq_class;

// Accepts "p/q" or "p"; the result is canonical (reduced, positive denominator).
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& x);

// num/den in canonical form; den must be nonzero
Scalar ratio(long num, long den);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace torvo
