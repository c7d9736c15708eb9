#pragma once

#include "graphoid/upoly.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace graphoid {

struct Mono {
  unsigned ex = 0, ey = 0;
  unsigned total() const { return ex + ey; }
  bool operator==(const Mono& o) const { return ex == o.ex && ey == o.ey; }
};

// Graded lexicographic term order (by total degree, then x-exponent).
inline bool mono_less(const Mono& a, const Mono& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return a.ex < b.ex;
}

// Sparse polynomial over Q in at most the two variables x, y, with terms
// kept in canonical graded-lex order and no zero coefficients, so equal
// polynomials have identical representations.
class Poly {
public:
  Poly() = default;
  static Poly constant(Rat c);
  static Poly variable_x() { return monomial(Rat(1), 1, 0); }
  static Poly variable_y() { return monomial(Rat(1), 0, 1); }
  static Poly monomial(Rat c, unsigned ex, unsigned ey);
  static Poly from_upoly_x(const UPoly& p);
  static Poly from_upoly_y(const UPoly& p);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Precondition: is_constant() (zero included).
  Rat constant_value() const;
  int degree_x() const;
  int degree_y() const;
  int total_degree() const;
  // Smallest total degree of a term (-1 for zero): the vanishing order at 0.
  int min_total_degree() const;
  bool depends_on_y() const { return degree_y() > 0; }
  bool depends_on_x() const { return degree_x() > 0; }

  const std::vector<std::pair<Mono, Rat>>& terms() const { return terms_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;
  Poly pow(unsigned k) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rat eval(const Rat& x, const Rat& y) const;
  BInt eval(const BInt& x, const BInt& y) const;

  Poly derivative_x() const;
  Poly derivative_y() const;

  // p(x + a, y + b)
  Poly shift(const Rat& a, const Rat& b) const;
  // x^degree_x * p(1/x, y) -- the chart at infinity in x.
  Poly chart_flip_x() const;
  Poly chart_flip_y() const;
  // Substitutions of one variable by a univariate polynomial in the other:
  // results are univariate. p(x, g(x)) and p(g(y), y).
  UPoly substitute_y(const UPoly& g_of_x) const;
  UPoly substitute_x(const UPoly& g_of_y) const;

  // Univariate views (precondition: the other variable is absent).
  UPoly to_upoly_x() const;
  UPoly to_upoly_y() const;

  std::string to_string() const;

  // Total order for canonical sorting of polynomials.
  static int compare(const Poly& a, const Poly& b);

private:
  static Poly from_terms(std::vector<std::pair<Mono, Rat>> ts);
  std::vector<std::pair<Mono, Rat>> terms_;
};

// Lowest-total-degree homogeneous blow-up charts around the origin.
// chart 1 substitutes y = t x:  p(x, tx) = x^d0 * P(x, t);
// chart 2 substitutes x = s y:  p(sy, y) = y^d0 * P(y, s).
// Returned polynomial has the radial variable in the x slot and the
// direction parameter in the y slot; d0 = min_total_degree().
Poly blowup_chart(const Poly& p, int chart);

// gcd over Q[x,y] (primitive PRS; unit-normalized so the result is
// primitive with positive leading rational). gcd(0, q) = q normalized.
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact division; throws std::logic_error when not divisible.
Poly poly_divexact(const Poly& p, const Poly& d);

// Resultant of a and b with respect to y: a univariate polynomial in x.
// Computed as a Sylvester determinant by fraction-free elimination.
UPoly resultant_y(const Poly& a, const Poly& b);

} // namespace graphoid
