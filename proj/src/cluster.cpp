#include "graphoid/membership.hpp"
#include "graphoid/roots.hpp"

#include <stdexcept>

namespace graphoid {

namespace {

// Reduced chart flip of a fraction (1/u substitution on chosen coordinates).
RatFunc chart_flip(const RatFunc& f, bool flip_x, bool flip_y) {
  Poly p = f.num(), q = f.den();
  if (flip_x) {
    int dp = std::max(p.degree_x(), 0), dq = std::max(q.degree_x(), 0);
    p = p.chart_flip_x();
    q = q.chart_flip_x();
    if (dq > dp) p = p * Poly::monomial(Rat(1), static_cast<unsigned>(dq - dp), 0);
    if (dp > dq) q = q * Poly::monomial(Rat(1), static_cast<unsigned>(dp - dq), 0);
  }
  if (flip_y) {
    int dp = std::max(p.degree_y(), 0), dq = std::max(q.degree_y(), 0);
    p = p.chart_flip_y();
    q = q.chart_flip_y();
    if (dq > dp) p = p * Poly::monomial(Rat(1), 0, static_cast<unsigned>(dq - dp));
    if (dp > dq) q = q * Poly::monomial(Rat(1), 0, static_cast<unsigned>(dp - dq));
  }
  return normalize(p, q);
}

// farey fractions of order n in [-1, 1], ascending
std::vector<Rat> farey_slopes(unsigned order) {
  std::vector<Rat> out;
  out.push_back(Rat(0));
  for (long den = 1; den <= static_cast<long>(order); ++den) {
    for (long num = 1; num <= den; ++num) {
      Rat r(num, den);
      r.canonicalize();
      out.push_back(r);
      out.push_back(-r);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// limit of the reduced pair (p, q) of one-variable polynomials at 0
XReal limit_at_zero(UPoly p, UPoly q) {
  UPoly g = upoly_gcd(p, q);
  if (!g.is_zero() && g.degree() >= 1) {
    p = upoly_divexact(p, g);
    q = upoly_divexact(q, g);
  }
  Rat qv = q.eval(Rat(0));
  if (qv != 0) {
    Rat v = p.eval(Rat(0)) / qv;
    v.canonicalize();
    return xfin(v);
  }
  if (p.eval(Rat(0)) != 0) return xinf();
  // gcd over Q removed every shared rational root, and 0 is rational
  throw std::logic_error("limit_at_zero: unreachable shared root at 0");
}

// directional probe along a parametrized curve (x(t), y(t)) through the
// origin: the one-variable limit of f on that curve, when the curve meets
// dom(f); nullopt otherwise.
std::optional<XReal> curve_probe(const Poly& p, const Poly& q, const UPoly& x_of_t,
                                 const UPoly& y_of_t, bool param_is_x) {
  UPoly ps, qs;
  if (param_is_x) {
    ps = p.substitute_y(y_of_t);
    qs = q.substitute_y(y_of_t);
  } else {
    ps = p.substitute_x(x_of_t);
    qs = q.substitute_x(x_of_t);
  }
  if (qs.is_zero()) {
    if (ps.is_zero()) return std::nullopt;  // curve inside the excluded locus
    return xinf();  // f = inf identically on the curve near 0
  }
  if (ps.is_zero()) return xfin(Rat(0));
  return limit_at_zero(ps, qs);
}

struct BlowupChart {
  Poly P, Q;  // radial variable in the x slot, direction parameter in y slot
  int k;      // power of the radial prefactor
};

BlowupChart make_chart(const Poly& p, const Poly& q, int chart) {
  BlowupChart bc;
  bc.P = blowup_chart(p, chart);
  bc.Q = blowup_chart(q, chart);
  bc.k = p.min_total_degree() - q.min_total_degree();
  Poly g = poly_gcd(bc.P, bc.Q);
  if (!g.is_constant()) {
    bc.P = poly_divexact(bc.P, g);
    bc.Q = poly_divexact(bc.Q, g);
  }
  return bc;
}

// certified superset of the cluster values contributed by one chart cone
std::vector<XInterval> chart_outer(const BlowupChart& bc, const ClusterBudget& budget) {
  std::vector<XInterval> arcs;
  long cells = 1L << budget.t_subdiv_log2;
  BInt X(-budget.radial_eps, budget.radial_eps);
  XInterval prefactor = XInterval::from_bint(BInt::point(Rat(1)));
  if (bc.k > 0) {
    prefactor = XInterval::from_bint(X.pow(static_cast<unsigned>(bc.k)));
  } else if (bc.k < 0) {
    prefactor = arc_recip(XInterval::from_bint(X.pow(static_cast<unsigned>(-bc.k))));
  }
  for (long i = 0; i < cells; ++i) {
    Rat t0 = Rat(-1) + Rat(2 * i, cells);
    Rat t1 = Rat(-1) + Rat(2 * (i + 1), cells);
    t0.canonicalize();
    t1.canonicalize();
    BInt T(t0, t1);
    XInterval cell = arc_div(bc.P.eval(X, T), bc.Q.eval(X, T));
    if (bc.k != 0) cell = arc_mul(prefactor, cell);
    arcs.push_back(cell);
    if (cell.is_full()) break;
  }
  return arcs;
}

// certified inner arcs from the boundary function lambda(t) = P(0,t)/Q(0,t)
std::vector<XInterval> chart_inner_sweep(const BlowupChart& bc,
                                         const std::vector<Rat>& samples) {
  std::vector<XInterval> arcs;
  if (bc.k != 0) return arcs;  // directional limits are not lambda here
  UPoly u0 = bc.P.substitute_x(UPoly::constant(Rat(0)));
  UPoly v0 = bc.Q.substitute_x(UPoly::constant(Rat(0)));
  if (v0.is_zero() || u0.is_zero()) return arcs;
  UPoly g = upoly_gcd(u0, v0);
  UPoly u = u0, v = v0;
  if (!g.is_zero() && g.degree() >= 1) {
    u = upoly_divexact(u0, g);
    v = upoly_divexact(v0, g);
  } else {
    g = UPoly();
  }
  return certified_value_arcs(u, v, g, Rat(-1), Rat(1), samples);
}

ClusterSet shrinkwrap_point(const RatFunc& f, const Rat& ax, const Rat& ay,
                            size_t arity, const XReal& value,
                            const ClusterBudget& budget) {
  ClusterSet cs;
  cs.inner.push_back(XInterval::singleton(value));
  Rat eps(1);
  Rat target2 = budget.shrink_target_diam * budget.shrink_target_diam;
  XInterval outer = XInterval::full_circle();
  for (int step = 0; step < budget.max_shrink_steps; ++step) {
    std::vector<XInterval> coords;
    coords.push_back(XInterval(xfin(ax - eps), xfin(ax + eps)));
    if (arity >= 2) coords.push_back(XInterval(xfin(ay - eps), xfin(ay + eps)));
    XInterval e = eval_interval(f, Box(coords));
    outer = e;
    if (arc_diameter_sq(e) < target2) break;
    eps /= 16;
  }
  cs.outer.push_back(outer);
  return cs;
}

} // namespace

ClusterSet cluster_set(const RatFunc& f, const std::vector<XReal>& at,
                       const ClusterBudget& budget) {
  size_t n = at.size();
  if (n < 1 || n > 2) throw std::invalid_argument("cluster_set expects 1 or 2 coordinates");
  if (f.depends_on_y() && n < 2)
    throw std::invalid_argument("two-variable function needs a two-coordinate base");

  // move infinite coordinates into the 1/u chart
  RatFunc g = chart_flip(f, at[0].is_infinite(), n >= 2 && at[1].is_infinite());
  Rat ax = at[0].is_infinite() ? Rat(0) : at[0].value();
  Rat ay = n >= 2 ? (at[1].is_infinite() ? Rat(0) : at[1].value()) : Rat(0);

  // translate the base point to the origin
  RatFunc h = normalize(g.num().shift(ax, ay), g.den().shift(ax, ay));
  Rat p0 = h.num().eval(Rat(0), Rat(0));
  Rat q0 = h.den().eval(Rat(0), Rat(0));

  if (q0 != 0 || p0 != 0) {
    XReal value = q0 != 0 ? [&] {
      Rat v = p0 / q0;
      v.canonicalize();
      return xfin(v);
    }()
                          : xinf();
    return shrinkwrap_point(h, Rat(0), Rat(0), n, value, budget);
  }

  // genuine indeterminacy point (n = 2 only: in one variable a reduced
  // fraction has no common roots at all)
  ClusterSet cs;
  std::vector<Rat> slopes = farey_slopes(budget.farey_order);
  std::vector<XInterval> inner, outer;
  const Poly& p = h.num();
  const Poly& q = h.den();

  for (int chart : {1, 2}) {
    BlowupChart bc = make_chart(p, q, chart);
    auto oc = chart_outer(bc, budget);
    outer.insert(outer.end(), oc.begin(), oc.end());
    auto ic = chart_inner_sweep(bc, slopes);
    inner.insert(inner.end(), ic.begin(), ic.end());
  }

  // directional probes: lines with farey slopes, the vertical line, and
  // the four parabola arcs
  for (const Rat& m : slopes) {
    auto v = curve_probe(p, q, UPoly(), UPoly({Rat(0), m}), true);
    if (v) inner.push_back(XInterval::singleton(*v));
  }
  if (auto v = curve_probe(p, q, UPoly::constant(Rat(0)), UPoly(), false))
    inner.push_back(XInterval::singleton(*v));
  for (int sgn : {1, -1}) {
    Rat s(sgn);
    if (auto v = curve_probe(p, q, UPoly(), UPoly({Rat(0), Rat(0), s}), true))
      inner.push_back(XInterval::singleton(*v));
    if (auto v = curve_probe(p, q, UPoly({Rat(0), Rat(0), s}), UPoly(), false))
      inner.push_back(XInterval::singleton(*v));
  }

  cs.inner = arc_union_normalize(std::move(inner));
  cs.outer = arc_union_normalize(std::move(outer));
  return cs;
}

} // namespace graphoid
