#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace okbody {

// Exact rational numbers. GMP's mpq_class keeps values canonical
// (lowest terms, positive denominator) as long as construction goes
// through make_rat / parse_rat.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& text);

// "n" when integral, "n/d" otherwise.
std::string rat_string(const Rat& r);

// Largest integer <= r, as a Rat.
Rat rat_floor(const Rat& r);
// Smallest integer >= r.
Rat rat_ceil(const Rat& r);

bool rat_is_integer(const Rat& r);

// Exact conversion; throws ValidationError when r is not an integer or
// does not fit in long.
long rat_to_long(const Rat& r);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

using Point = std::vector<Rat>;

} // namespace okbody
