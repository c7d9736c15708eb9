#pragma once

#include "graphoid/arc.hpp"
#include "graphoid/rat.hpp"

#include <string>
#include <vector>

namespace graphoid {

// Dense univariate polynomial over Q. coeffs[i] is the coefficient of x^i;
// no trailing zeros are stored (the zero polynomial has an empty vector).
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly constant(Rat c);
  static UPoly monomial(Rat c, unsigned deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](size_t i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Rat& c) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  Rat eval(const Rat& x) const;
  BInt eval(const BInt& x) const;

  UPoly derivative() const;
  // p(x + a)
  UPoly shift(const Rat& a) const;
  // p(c x)
  UPoly scale_arg(const Rat& c) const;
  // x^deg * p(1/x)
  UPoly reverse() const;
  // p(q(x))
  UPoly compose(const UPoly& q) const;

private:
  void trim();
  std::vector<Rat> c_;
};

// Division with remainder over Q; q nonzero.
struct UPolyDivMod {
  UPoly quot, rem;
};
UPolyDivMod upoly_divmod(const UPoly& p, const UPoly& q);

// Exact division; throws std::logic_error if the remainder is nonzero.
UPoly upoly_divexact(const UPoly& p, const UPoly& q);

// Monic gcd over Q (gcd(0,0) = 0).
UPoly upoly_gcd(const UPoly& a, const UPoly& b);

// p / gcd(p, p'): same distinct roots, all simple.
UPoly upoly_squarefree(const UPoly& p);

// Primitive integer form: all coefficients integers with gcd 1 and positive
// leading coefficient; equals p up to a positive rational unit.
UPoly upoly_primitive_integer(const UPoly& p);

} // namespace graphoid
