#pragma once

#include <gmpxx.h>

#include <string>

namespace thermoid::polyalg {

/// Exact rational over arbitrary-precision integers; always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace thermoid::polyalg
