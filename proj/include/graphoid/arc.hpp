#pragma once

#include "graphoid/xreal.hpp"

#include <string>
#include <vector>

namespace graphoid {

// Bounded closed rational interval [lo, hi] of R; the workhorse of all
// polynomial interval evaluation. Arcs (XInterval) only appear where a
// range can legitimately pass through infinity.
struct BInt {
  Rat lo, hi;

  BInt() : lo(0), hi(0) {}
  BInt(Rat l, Rat h);
  static BInt point(Rat v) { return BInt(v, v); }

  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }

  BInt operator+(const BInt& o) const { return BInt(lo + o.lo, hi + o.hi); }
  BInt operator-(const BInt& o) const { return BInt(lo - o.hi, hi - o.lo); }
  BInt operator-() const { return BInt(-hi, -lo); }
  BInt operator*(const BInt& o) const;
  BInt scaled(const Rat& c) const;
  // Tight power: even exponents across zero collapse to [0, max].
  BInt pow(unsigned k) const;
  BInt hull(const BInt& o) const { return BInt(rat_min(lo, o.lo), rat_max(hi, o.hi)); }

  bool operator==(const BInt& o) const { return lo == o.lo && hi == o.hi; }
};

// Closed arc of the circle S = R u {inf}, traversed counterclockwise
// (increasing t in the stereographic chart, wrapping through inf) from
// lo to hi. full set means the whole circle. Shapes:
//   lo <= hi finite      : [lo, hi] subset of R
//   lo >  hi finite      : {t >= lo} u {inf} u {t <= hi}
//   lo = inf, hi finite  : {inf} u {t <= hi}
//   lo finite, hi = inf  : {t >= lo} u {inf}
//   lo = hi              : singleton
class XInterval {
public:
  XInterval() : lo_(xfin(0)), hi_(xfin(0)), full_(false) {}
  XInterval(XReal lo, XReal hi) : lo_(std::move(lo)), hi_(std::move(hi)), full_(false) {}
  static XInterval full_circle() { XInterval a; a.full_ = true; return a; }
  static XInterval singleton(XReal v) { return XInterval(v, v); }
  static XInterval from_bint(const BInt& b) { return XInterval(xfin(b.lo), xfin(b.hi)); }

  bool is_full() const { return full_; }
  bool is_singleton() const { return !full_ && lo_ == hi_; }
  const XReal& lo() const { return lo_; }
  const XReal& hi() const { return hi_; }

  bool contains(const XReal& v) const;
  bool contains_infinity() const;

  std::string to_string() const;

private:
  XReal lo_, hi_;
  bool full_;
};

// Exact membership-driven arc predicates.
bool arc_contains_arc(const XInterval& outer, const XInterval& inner);
bool arcs_intersect(const XInterval& a, const XInterval& b);

// Exact comparison of arc angular lengths (gap lengths): -1, 0, +1.
// Decided by half-turn classification plus chordal comparison; no floats.
int cmp_arc_length(const XInterval& a, const XInterval& b);

// Smallest closed arc containing every point; full circle when the
// maximal complementary gap is not unique. Throws on empty input.
XInterval arc_hull(const std::vector<XReal>& points);

// Smallest arc containing both (deterministic among ties).
XInterval arc_hull2(const XInterval& a, const XInterval& b);

// Merge a set of arcs into pairwise-disjoint arcs (unions of intersecting
// arcs; collapses to a single full circle when the union covers S).
std::vector<XInterval> arc_union_normalize(std::vector<XInterval> arcs);

// Circle inversion t -> 1/t; maps arcs to arcs exactly.
XInterval arc_recip(const XInterval& a);

// Enclosure of closure({p/q : p in P, q in Q, q != 0} u {inf where q = 0,
// p != 0}) for bounded P, Q. Exact case analysis; full circle iff both
// contain zero with positive width (and for P = Q = {0}).
XInterval arc_div(const BInt& P, const BInt& Q);

// Sound enclosure of the multivalued product of two arcs (honors
// 0 (.) inf = S).
XInterval arc_mul(const XInterval& a, const XInterval& b);

// Squared chordal diameter of the arc: 4 when the arc spans a half turn
// or more, otherwise the squared endpoint chord. In [0,4].
Rat arc_diameter_sq(const XInterval& a);

// Arc midpoint convention: inf for any arc through infinity (and the full
// circle), endpoint for singletons, arithmetic midpoint otherwise.
XReal arc_midpoint(const XInterval& a);

// Decomposition for evaluation charts: pieces of the arc expressed in the
// direct chart (|x| <= 1) and in the inverted chart u = 1/x (|u| <= 1,
// u = 0 standing for inf). Every returned interval is within [-1, 1].
struct ChartPiece {
  bool inverted;
  BInt range;
};
std::vector<ChartPiece> arc_chart_pieces(const XInterval& a);

// Rational-endpoint arc approximating the closed chordal ball around
// center with radius rho > 0: a subset when outer=false (for witness
// regions), a superset when outer=true (for exclusion certificates).
XInterval chordal_ball_arc(const XReal& center, const Rat& rho, bool outer);

} // namespace graphoid
