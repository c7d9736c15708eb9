#pragma once

#include "graphoid/rat.hpp"

#include <optional>
#include <string>

namespace graphoid {

// A point of the one-point compactification S = R u {inf}. Finite values
// are reduced exact rationals; inf is the single point at infinity (no
// sign: +inf and -inf are identified).
class XReal {
public:
  XReal() : finite_(true), value_(0) {}
  explicit XReal(Rat v) : finite_(true), value_(std::move(v)) {}
  static XReal infinity() { XReal r; r.finite_ = false; r.value_ = 0; return r; }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }
  // Precondition: is_finite().
  const Rat& value() const;

  bool operator==(const XReal& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  bool operator!=(const XReal& o) const { return !(*this == o); }

  std::string to_string() const;
  // Accepts the token "inf" or any rational literal.
  static XReal from_string(const std::string& text);

private:
  bool finite_;
  Rat value_;
};

inline XReal xfin(Rat v) { return XReal(std::move(v)); }
inline XReal xfin(long v) { return XReal(Rat(v)); }
inline XReal xinf() { return XReal::infinity(); }

// Value set of a multivalued operation: either one point of S or all of S.
class XSet {
public:
  static XSet singleton(XReal v) { return XSet(false, std::move(v)); }
  static XSet all() { return XSet(true, XReal()); }

  bool is_all() const { return all_; }
  // Precondition: !is_all().
  const XReal& point() const;

  bool contains(const XReal& v) const { return all_ || v == point_; }
  bool operator==(const XSet& o) const {
    return all_ == o.all_ && (all_ || point_ == o.point_);
  }

private:
  XSet(bool all, XReal p) : all_(all), point_(std::move(p)) {}
  bool all_;
  XReal point_;
};

// Multivalued addition on S: {r+s} when defined, all of S iff r = s = inf.
XSet xadd(const XReal& r, const XReal& s);

// Multivalued multiplication on S: {r*s} when defined (nonzero * inf = inf),
// all of S iff {r,s} = {0,inf}.
XSet xmul(const XReal& r, const XReal& s);

// Squared chordal distance under t -> (2t, t^2-1)/(1+t^2), inf -> (0,1).
// Exact rational; range [0,4]. The distance itself is sqrt of this.
Rat chordal_sq(const XReal& u, const XReal& v);

// Antipodal point on the circle: t -> -1/t, 0 <-> inf.
XReal antipode(const XReal& v);

} // namespace graphoid
