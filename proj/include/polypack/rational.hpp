#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polypack {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "p/q" or "p"; throws Error(Parse) on malformed input or q == 0.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" text; integers are rendered as "p/1" for a uniform format.
std::string format_scalar(const Scalar& v);

inline int sign(const Scalar& v) { return sgn(v); }

}  // namespace polypack
