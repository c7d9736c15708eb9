#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace graphoid {

// Exact rational scalar. All certified arithmetic in the library runs on
// this type; floating point never enters a certificate.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long n, long d) { Rat r(n, d); r.canonicalize(); return r; }

// Parses "7", "-3/4" or "2.125" (decimals are exact). Throws
// std::invalid_argument on anything else.
Rat rat_from_string(const std::string& text);

// Canonical form: "n" when the denominator is 1, else "n/d".
std::string rat_to_string(const Rat& r);

Rat rat_pow(const Rat& base, unsigned exp);
Rat rat_abs(const Rat& r);

// min/max by value.
const Rat& rat_min(const Rat& a, const Rat& b);
const Rat& rat_max(const Rat& a, const Rat& b);

// Rational bounds for sqrt(r), r >= 0: returns lo (resp. hi) with
// lo^2 <= r <= hi^2 and hi - lo <= r_slack * max(1, lo). Exact integer
// square roots on scaled numerators; no floating point.
Rat rat_sqrt_below(const Rat& r, unsigned precision_bits = 64);
Rat rat_sqrt_above(const Rat& r, unsigned precision_bits = 64);

// Nearest simpler rationals: floor/ceil as integers.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

} // namespace graphoid
