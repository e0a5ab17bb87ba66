#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quadrant {

using Rational = mpq_class;

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Accepts "p", "-p" or "p/q"; throws InputError otherwise.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& value) { return value.get_d(); }

inline Rational make_rational(long numerator, long denominator = 1) {
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

}  // namespace quadrant
