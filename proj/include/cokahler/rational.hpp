#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cokahler {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Parses "3", "-1/2", "+4" into a canonical rational. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Integer lcm_of_denominators(const Vector& v);

bool is_zero(const Vector& v);

}  // namespace cokahler
