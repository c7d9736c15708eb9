#pragma once

#include "graphoid/arc.hpp"
#include "graphoid/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphoid {

// Irreducible fraction p/q of polynomials over Q. Unique representation:
// gcd(p, q) = 1, q != 0, and q primitive-integer with positive leading
// term, p scaled to integer coefficients accordingly... see normalize().
class RatFunc {
public:
  RatFunc() : num_(Poly()), den_(Poly::constant(Rat(1))) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const;
  bool depends_on_y() const { return num_.depends_on_y() || den_.depends_on_y(); }
  // number of variables of the ambient space this function is read in
  int arity() const { return depends_on_y() ? 2 : 1; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc pow(unsigned k) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string to_string() const;

  friend RatFunc normalize(const Poly& p, const Poly& q);

private:
  Poly num_, den_;
};

// The irreducible-fraction normalization: reduces p/q by their gcd and
// fixes the unit so equal rational functions have equal representations.
// Throws std::invalid_argument when q is the zero polynomial.
RatFunc normalize(const Poly& p, const Poly& q);

inline RatFunc ratfunc_constant(Rat c) {
  return normalize(Poly::constant(std::move(c)), Poly::constant(Rat(1)));
}
inline RatFunc ratfunc_x() { return normalize(Poly::variable_x(), Poly::constant(Rat(1))); }
inline RatFunc ratfunc_y() { return normalize(Poly::variable_y(), Poly::constant(Rat(1))); }

// The excluded locus p^-1(0) n q^-1(0) as the polynomial system
// {p = 0, q = 0}. Points failing this system are in dom(f); where only q
// vanishes the value is inf.
struct ExcludedLocus {
  Poly p, q;
  std::string describe() const;
};
ExcludedLocus domain_excluded(const RatFunc& f);

// Exact evaluation into S: p(a)/q(a); inf when only q vanishes; nullopt
// (undefined) when both vanish.
std::optional<XReal> eval_exact(const RatFunc& f, const Rat& x, const Rat& y = Rat(0));

// Product region in S^n: one closed arc per coordinate.
struct Box {
  std::vector<XInterval> coords;

  explicit Box(std::vector<XInterval> c) : coords(std::move(c)) {
    if (coords.empty()) throw std::invalid_argument("empty box");
  }
  size_t arity() const { return coords.size(); }
  static Box whole(size_t n) {
    return Box(std::vector<XInterval>(n, XInterval::full_circle()));
  }
};

// Sound enclosure of f over region n dom(f). Coordinates reaching past
// |x| = 1 are evaluated in the 1/u chart (boxes split at the chart seam),
// so all interior interval arithmetic stays bounded. The full circle is
// always a legal answer.
XInterval eval_interval(const RatFunc& f, const Box& region);

// Finite ordered family of distinct rational functions with stable ids.
struct FamilyMember {
  std::string id;
  RatFunc f;
};

class FunctionFamily {
public:
  FunctionFamily() = default;
  explicit FunctionFamily(std::vector<FamilyMember> members);

  const std::vector<FamilyMember>& members() const { return members_; }
  const RatFunc& at(const std::string& id) const;
  bool has(const std::string& id) const;
  size_t size() const { return members_.size(); }
  // 2 when any member involves y, else 1.
  int arity() const;

private:
  std::vector<FamilyMember> members_;
};

// Expression parser; see the grammar in the README. Throws ParseError
// carrying the offending position.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

private:
  size_t pos_;
};

RatFunc parse_ratfunc(const std::string& text);

} // namespace graphoid
