#include "graphoid/arc.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphoid {

BInt::BInt(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::logic_error("BInt endpoints out of order");
}

BInt BInt::operator*(const BInt& o) const {
  Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  Rat mn = rat_min(rat_min(a, b), rat_min(c, d));
  Rat mx = rat_max(rat_max(a, b), rat_max(c, d));
  return BInt(mn, mx);
}

BInt BInt::scaled(const Rat& c) const {
  if (c >= 0) return BInt(lo * c, hi * c);
  return BInt(hi * c, lo * c);
}

BInt BInt::pow(unsigned k) const {
  if (k == 0) return BInt(Rat(1), Rat(1));
  if (k % 2 == 1) return BInt(rat_pow(lo, k), rat_pow(hi, k));
  if (lo >= 0) return BInt(rat_pow(lo, k), rat_pow(hi, k));
  if (hi <= 0) return BInt(rat_pow(hi, k), rat_pow(lo, k));
  return BInt(Rat(0), rat_max(rat_pow(lo, k), rat_pow(hi, k)));
}

bool XInterval::contains(const XReal& v) const {
  if (full_) return true;
  bool lo_inf = lo_.is_infinite(), hi_inf = hi_.is_infinite();
  if (lo_inf && hi_inf) return v.is_infinite();
  if (lo_inf) return v.is_infinite() || v.value() <= hi_.value();
  if (hi_inf) return v.is_infinite() || v.value() >= lo_.value();
  if (lo_.value() <= hi_.value())
    return v.is_finite() && lo_.value() <= v.value() && v.value() <= hi_.value();
  return v.is_infinite() || v.value() >= lo_.value() || v.value() <= hi_.value();
}

bool XInterval::contains_infinity() const {
  if (full_) return true;
  if (lo_.is_infinite() || hi_.is_infinite()) return true;
  return lo_.value() > hi_.value();
}

std::string XInterval::to_string() const {
  if (full_) return "[S]";
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

namespace {

// A point strictly inside the ccw arc (a -> b), a != b.
XReal arc_interior_sample(const XReal& a, const XReal& b) {
  if (a.is_infinite() && b.is_infinite())
    throw std::logic_error("no interior of a degenerate arc");
  if (a.is_infinite()) return xfin(b.value() - 1);
  if (b.is_infinite()) return xfin(a.value() + 1);
  if (a.value() < b.value()) return xfin((a.value() + b.value()) / 2);
  if (a.value() > b.value()) return xinf();
  throw std::logic_error("no interior of a degenerate arc");
}

// ccw order with inf as the last point of the circle walk.
bool circ_less(const XReal& a, const XReal& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

// Half-turn class of the ccw arc (a -> b): false if its angular length is
// strictly below pi.
bool gap_at_least_half_turn(const XReal& a, const XReal& b) {
  if (a == b) return false;
  return XInterval(a, b).contains(antipode(a));
}

// Exact comparison of ccw gap lengths.
int cmp_gap(const XReal& a, const XReal& b, const XReal& c, const XReal& d) {
  bool h1 = gap_at_least_half_turn(a, b);
  bool h2 = gap_at_least_half_turn(c, d);
  if (h1 != h2) return h1 ? 1 : -1;
  Rat x = chordal_sq(a, b), y = chordal_sq(c, d);
  int base = x < y ? -1 : (x > y ? 1 : 0);
  return h1 ? -base : base;  // above a half turn, larger chord = shorter complement
}

} // namespace

bool arc_contains_arc(const XInterval& outer, const XInterval& inner) {
  if (outer.is_full()) return true;
  if (inner.is_full()) return false;
  if (outer.is_singleton())
    return inner.is_singleton() && inner.lo() == outer.lo();
  if (!outer.contains(inner.lo()) || !outer.contains(inner.hi())) return false;
  if (inner.is_singleton()) return true;
  // Endpoints inside; inner escapes only by swallowing outer's complement.
  XReal gap_probe = arc_interior_sample(outer.hi(), outer.lo());
  return !inner.contains(gap_probe);
}

bool arcs_intersect(const XInterval& a, const XInterval& b) {
  if (a.is_full() || b.is_full()) return true;
  return a.contains(b.lo()) || a.contains(b.hi()) || b.contains(a.lo()) ||
         b.contains(a.hi());
}

int cmp_arc_length(const XInterval& a, const XInterval& b) {
  if (a.is_full() || b.is_full()) {
    if (a.is_full() && b.is_full()) return 0;
    return a.is_full() ? 1 : -1;
  }
  if (a.is_singleton() || b.is_singleton()) {
    if (a.is_singleton() && b.is_singleton()) return 0;
    return a.is_singleton() ? -1 : 1;
  }
  return cmp_gap(a.lo(), a.hi(), b.lo(), b.hi());
}

XInterval arc_hull(const std::vector<XReal>& points) {
  if (points.empty()) throw std::invalid_argument("arc_hull of empty set");
  std::vector<XReal> pts = points;
  std::sort(pts.begin(), pts.end(), circ_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return XInterval::singleton(pts[0]);

  // Largest circular gap between consecutive points; hull is its complement.
  size_t n = pts.size();
  size_t best = 0;
  bool tie = false;
  for (size_t i = 1; i < n; ++i) {
    int c = cmp_gap(pts[i], pts[(i + 1) % n], pts[best], pts[(best + 1) % n]);
    if (c > 0) {
      best = i;
      tie = false;
    } else if (c == 0) {
      tie = true;
    }
  }
  if (tie) return XInterval::full_circle();
  return XInterval(pts[(best + 1) % n], pts[best]);
}

XInterval arc_hull2(const XInterval& a, const XInterval& b) {
  if (a.is_full() || b.is_full()) return XInterval::full_circle();
  XInterval candidates[4] = {
      a, b, XInterval(a.lo(), b.hi()), XInterval(b.lo(), a.hi())};
  const XInterval* best = nullptr;
  for (const XInterval& c : candidates) {
    if (!arc_contains_arc(c, a) || !arc_contains_arc(c, b)) continue;
    if (!best || cmp_arc_length(c, *best) < 0) best = &c;
  }
  if (!best) return XInterval::full_circle();
  return *best;
}

std::vector<XInterval> arc_union_normalize(std::vector<XInterval> arcs) {
  for (const XInterval& a : arcs)
    if (a.is_full()) return {XInterval::full_circle()};
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < arcs.size() && !changed; ++i) {
      for (size_t j = i + 1; j < arcs.size() && !changed; ++j) {
        if (!arcs_intersect(arcs[i], arcs[j])) continue;
        XInterval merged = arc_hull2(arcs[i], arcs[j]);
        if (merged.is_full()) return {XInterval::full_circle()};
        arcs[j] = arcs.back();
        arcs.pop_back();
        arcs[i] = merged;
        changed = true;
      }
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const XInterval& x, const XInterval& y) {
    return circ_less(x.lo(), y.lo());
  });
  return arcs;
}

XInterval arc_recip(const XInterval& a) {
  if (a.is_full()) return XInterval::full_circle();
  auto recip_point = [](const XReal& v) -> XReal {
    if (v.is_infinite()) return xfin(0);
    if (v.value() == 0) return xinf();
    Rat r = Rat(1) / v.value();
    r.canonicalize();
    return xfin(r);
  };
  return XInterval(recip_point(a.hi()), recip_point(a.lo()));
}

XInterval arc_div(const BInt& P, const BInt& Q) {
  auto q = [](const Rat& a, const Rat& b) {
    Rat r = a / b;
    r.canonicalize();
    return r;
  };
  if (Q.lo == 0 && Q.hi == 0) {
    if (P.lo > 0 || P.hi < 0) return XInterval::singleton(xinf());
    return XInterval::full_circle();
  }
  if (Q.lo > 0 || Q.hi < 0) {
    Rat a = q(P.lo, Q.lo), b = q(P.lo, Q.hi), c = q(P.hi, Q.lo), d = q(P.hi, Q.hi);
    Rat mn = rat_min(rat_min(a, b), rat_min(c, d));
    Rat mx = rat_max(rat_max(a, b), rat_max(c, d));
    return XInterval(xfin(mn), xfin(mx));
  }
  // 0 in Q, Q not a point.
  if (P.lo == 0 && P.hi == 0) return XInterval::singleton(xfin(Rat(0)));
  if (P.contains_zero()) return XInterval::full_circle();
  if (P.lo > 0) {
    XReal lo = Q.hi == 0 ? xinf() : xfin(q(P.lo, Q.hi));
    XReal hi = Q.lo == 0 ? xinf() : xfin(q(P.lo, Q.lo));
    return XInterval(lo, hi);
  }
  XReal lo = Q.lo == 0 ? xinf() : xfin(q(P.hi, Q.lo));
  XReal hi = Q.hi == 0 ? xinf() : xfin(q(P.hi, Q.hi));
  return XInterval(lo, hi);
}

namespace {

struct EInt {
  // endpoint kinds: -1 = -inf, 0 = finite, +1 = +inf
  int lo_kind = 0, hi_kind = 0;
  Rat lo, hi;
};

void arc_pieces(const XInterval& a, std::vector<EInt>& out) {
  bool lo_inf = a.lo().is_infinite(), hi_inf = a.hi().is_infinite();
  if (lo_inf && hi_inf) return;  // bare infinity point, handled separately
  if (lo_inf) {
    out.push_back(EInt{-1, 0, Rat(0), a.hi().value()});
  } else if (hi_inf) {
    out.push_back(EInt{0, 1, a.lo().value(), Rat(0)});
  } else if (a.lo().value() <= a.hi().value()) {
    out.push_back(EInt{0, 0, a.lo().value(), a.hi().value()});
  } else {
    out.push_back(EInt{0, 1, a.lo().value(), Rat(0)});
    out.push_back(EInt{-1, 0, Rat(0), a.hi().value()});
  }
}

// Multiply extended endpoints; (0, inf) pairs are excluded by the callers.
struct Ext {
  int kind;  // -1, 0, +1
  Rat v;
};

Ext ext_mul(const Ext& x, const Ext& y) {
  if (x.kind == 0 && y.kind == 0) return {0, x.v * y.v};
  int sx = x.kind != 0 ? x.kind : (x.v > 0 ? 1 : (x.v < 0 ? -1 : 0));
  int sy = y.kind != 0 ? y.kind : (y.v > 0 ? 1 : (y.v < 0 ? -1 : 0));
  return {sx * sy >= 0 ? 1 : -1, Rat(0)};
}

bool ext_less(const Ext& x, const Ext& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.kind != 0) return false;
  return x.v < y.v;
}

bool arc_has_nonzero(const XInterval& a) {
  if (a.is_full()) return true;
  if (a.is_singleton()) return !(a.lo().is_finite() && a.lo().value() == 0);
  return true;  // a nondegenerate arc always has nonzero points
}

} // namespace

XInterval arc_mul(const XInterval& A, const XInterval& B) {
  if (A.is_full() || B.is_full()) return XInterval::full_circle();
  bool a_zero = A.contains(xfin(0)), b_zero = B.contains(xfin(0));
  bool a_inf = A.contains_infinity(), b_inf = B.contains_infinity();
  if ((a_zero && b_inf) || (b_zero && a_inf)) return XInterval::full_circle();

  std::vector<EInt> pa, pb;
  arc_pieces(A, pa);
  arc_pieces(B, pb);

  std::vector<XInterval> results;
  bool result_has_inf = (a_inf && arc_has_nonzero(B)) || (b_inf && arc_has_nonzero(A));
  if (result_has_inf) results.push_back(XInterval::singleton(xinf()));

  for (const EInt& x : pa) {
    for (const EInt& y : pb) {
      Ext cx[2] = {{x.lo_kind, x.lo}, {x.hi_kind, x.hi}};
      Ext cy[2] = {{y.lo_kind, y.lo}, {y.hi_kind, y.hi}};
      Ext mn{0, Rat(0)}, mx{0, Rat(0)};
      bool first = true;
      for (const Ext& u : cx) {
        for (const Ext& v : cy) {
          Ext p = ext_mul(u, v);
          if (first || ext_less(p, mn)) mn = p;
          if (first || ext_less(mx, p)) mx = p;
          first = false;
        }
      }
      if (mn.kind == -1 && mx.kind == 1) return XInterval::full_circle();
      XReal lo = mn.kind == -1 ? xinf() : xfin(mn.v);
      XReal hi = mx.kind == 1 ? xinf() : xfin(mx.v);
      results.push_back(XInterval(lo, hi));
    }
  }
  if (results.empty()) {
    // both arcs were the bare infinity point
    return XInterval::singleton(xinf());
  }
  XInterval acc = results[0];
  for (size_t i = 1; i < results.size(); ++i) acc = arc_hull2(acc, results[i]);
  return acc;
}

Rat arc_diameter_sq(const XInterval& a) {
  if (a.is_full()) return Rat(4);
  if (a.is_singleton()) return Rat(0);
  if (a.contains(antipode(a.lo()))) return Rat(4);
  return chordal_sq(a.lo(), a.hi());
}

XReal arc_midpoint(const XInterval& a) {
  if (a.is_full()) return xinf();
  if (a.is_singleton()) return a.lo();
  if (a.contains_infinity()) return xinf();
  return xfin((a.lo().value() + a.hi().value()) / 2);
}

namespace {

void intersect_with_unit(const XInterval& a, std::vector<BInt>& out) {
  const Rat one(1), neg_one(-1);
  auto clip = [&](const Rat& l, const Rat& h) {
    Rat lo = rat_max(l, neg_one), hi = rat_min(h, one);
    if (lo <= hi) out.push_back(BInt(lo, hi));
  };
  if (a.is_full()) {
    out.push_back(BInt(neg_one, one));
    return;
  }
  bool lo_inf = a.lo().is_infinite(), hi_inf = a.hi().is_infinite();
  if (lo_inf && hi_inf) return;
  if (lo_inf) {
    clip(neg_one, a.hi().value());
  } else if (hi_inf) {
    clip(a.lo().value(), one);
  } else if (a.lo().value() <= a.hi().value()) {
    clip(a.lo().value(), a.hi().value());
  } else {
    clip(a.lo().value(), one);
    clip(neg_one, a.hi().value());
  }
}

} // namespace

std::vector<ChartPiece> arc_chart_pieces(const XInterval& a) {
  std::vector<ChartPiece> pieces;
  std::vector<BInt> direct;
  intersect_with_unit(a, direct);
  for (BInt& b : direct) pieces.push_back(ChartPiece{false, std::move(b)});
  std::vector<BInt> inverted;
  intersect_with_unit(arc_recip(a), inverted);
  for (BInt& b : inverted) pieces.push_back(ChartPiece{true, std::move(b)});
  return pieces;
}

XInterval chordal_ball_arc(const XReal& center, const Rat& rho, bool outer) {
  if (rho <= 0) throw std::invalid_argument("ball radius must be positive");
  Rat rho2 = rho * rho;
  if (center.is_infinite()) {
    // {t : 4/(1+t^2) <= rho^2} u {inf}
    Rat bound = Rat(4) / rho2 - 1;
    bound.canonicalize();
    if (bound <= 0) return XInterval::full_circle();
    Rat m = outer ? rat_sqrt_below(bound) : rat_sqrt_above(bound);
    if (m == 0) m = outer ? Rat(0) : Rat(1, 1000000);
    return XInterval(xfin(m), xfin(-m));
  }
  const Rat& c = center.value();
  // (1-K) t^2 - 2c t + (c^2 - K) <= 0 with K = rho^2 (1+c^2)/4
  Rat K = rho2 * (1 + c * c) / 4;
  K.canonicalize();
  Rat A = 1 - K, B = -2 * c, C = c * c - K;
  Rat disc = B * B - 4 * A * C;
  disc.canonicalize();
  if (A == 0) {
    // boundary case: linear inequality; ball reaches inf exactly
    if (c == 0) return XInterval::full_circle();
    Rat edge = (c * c - 1) / (2 * c);
    edge.canonicalize();
    if (c > 0) return XInterval(xfin(edge), xinf());
    return XInterval(xinf(), xfin(edge));
  }
  if (disc < 0) {
    // only when A < 0: the inequality holds everywhere
    return XInterval::full_circle();
  }
  Rat s_lo = rat_sqrt_below(disc), s_hi = rat_sqrt_above(disc);
  if (A > 0) {
    // bounded arc between the roots
    const Rat& s = outer ? s_hi : s_lo;
    Rat r1 = (-B - s) / (2 * A), r2 = (-B + s) / (2 * A);
    r1.canonicalize();
    r2.canonicalize();
    if (r1 > r2) std::swap(r1, r2);
    if (!outer && r1 > r2) return XInterval::singleton(center);
    return XInterval(xfin(r1), xfin(r2));
  }
  // A < 0: complement-type arc through infinity
  const Rat& s = outer ? s_lo : s_hi;
  Rat r1 = (-B + s) / (2 * A), r2 = (-B - s) / (2 * A);  // r1 < r2 since A < 0
  r1.canonicalize();
  r2.canonicalize();
  return XInterval(xfin(r2), xfin(r1));
}

} // namespace graphoid
