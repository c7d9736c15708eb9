#include "graphoid/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphoid {

namespace {

// Positive-unit primitive scaling (keeps the sign of every value).
UPoly primitive_keep_sign(const UPoly& p) {
  if (p.is_zero()) return p;
  UPoly q = upoly_primitive_integer(p);
  if ((p.leading() < 0) != (q.leading() < 0)) q = -q;
  return q;
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain;
  UPoly a = primitive_keep_sign(upoly_squarefree(p));
  if (a.is_zero()) return chain;
  chain.push_back(a);
  UPoly b = primitive_keep_sign(a.derivative());
  while (!b.is_zero()) {
    chain.push_back(b);
    UPoly r = upoly_divmod(chain[chain.size() - 2], b).rem;
    b = primitive_keep_sign(-r);
  }
  return chain;
}

int variations_at(const std::vector<UPoly>& chain, const Rat& x) {
  int v = 0, last = 0;
  for (const UPoly& p : chain) {
    Rat val = p.eval(x);
    int s = val > 0 ? 1 : (val < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int count_half_open(const std::vector<UPoly>& chain, const Rat& a, const Rat& b) {
  if (a >= b) return 0;
  return variations_at(chain, a) - variations_at(chain, b);
}

} // namespace

Rat root_bound(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
  Rat m(0);
  const Rat& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = rat_abs(p[static_cast<size_t>(i)] / lead);
    r.canonicalize();
    m = rat_max(m, r);
  }
  return 1 + m;
}

int sturm_count(const UPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of zero polynomial");
  auto chain = sturm_chain(p);
  if (chain.empty() || chain[0].degree() <= 0) return 0;
  return count_half_open(chain, a, b);
}

int sturm_count_all(const UPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of zero polynomial");
  if (p.degree() == 0) return 0;
  Rat B = root_bound(p);
  return sturm_count(p, -B, B);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& p) {
  std::vector<std::pair<Rat, Rat>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  auto chain = sturm_chain(p);
  const UPoly& sf = chain[0];
  if (sf.degree() <= 0) return out;
  Rat B = root_bound(p);

  struct Seg {
    Rat lo, hi;
    int count;
  };
  std::vector<Seg> todo;
  todo.push_back({-B, B, count_half_open(chain, -B, B)});
  while (!todo.empty()) {
    Seg s = todo.back();
    todo.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1 && sf.eval(s.hi) != 0) {
      // endpoints are non-roots (lo by construction, hi just checked)
      out.push_back({s.lo, s.hi});
      continue;
    }
    Rat m = (s.lo + s.hi) / 2;
    m.canonicalize();
    if (sf.eval(m) == 0) {
      // exact rational root at the midpoint: fence it off
      Rat w = (s.hi - s.lo) / 4;
      for (;;) {
        Rat ml = m - w, mr = m + w;
        if (sf.eval(ml) != 0 && sf.eval(mr) != 0 &&
            count_half_open(chain, ml, mr) == 1) {
          out.push_back({ml, mr});
          int left = count_half_open(chain, s.lo, ml);
          int right = count_half_open(chain, mr, s.hi);
          if (left > 0) todo.push_back({s.lo, ml, left});
          if (right > 0) todo.push_back({mr, s.hi, right});
          break;
        }
        w /= 2;
      }
      continue;
    }
    int left = count_half_open(chain, s.lo, m);
    int right = s.count - left;
    if (left > 0) todo.push_back({s.lo, m, left});
    if (right > 0) todo.push_back({m, s.hi, right});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::pair<Rat, Rat> refine_root(const UPoly& p, std::pair<Rat, Rat> iso,
                                const Rat& width) {
  auto chain = sturm_chain(p);
  const UPoly& sf = chain[0];
  while (iso.second - iso.first > width) {
    Rat m = (iso.first + iso.second) / 2;
    m.canonicalize();
    if (sf.eval(m) == 0) {
      // the root is exactly m; shrink symmetrically around it
      Rat w = rat_min(width / 4, (iso.second - iso.first) / 8);
      while (sf.eval(m - w) == 0 || sf.eval(m + w) == 0 ||
             count_half_open(chain, m - w, m + w) != 1)
        w /= 2;
      return {m - w, m + w};
    }
    if (count_half_open(chain, iso.first, m) == 1)
      iso.second = m;
    else
      iso.first = m;
  }
  return iso;
}

int sign_at_root(const UPoly& p, std::pair<Rat, Rat> iso, const UPoly& g) {
  // Decide sign(g(r)) for the root r isolated by iso. If g(r) could be 0,
  // detect it exactly through a shared-root test.
  UPoly common = upoly_gcd(upoly_squarefree(p), g);
  if (!common.is_zero() && common.degree() >= 1 &&
      sturm_count(common, iso.first, iso.second) > 0)
    return 0;
  for (;;) {
    BInt e = g.eval(BInt(iso.first, iso.second));
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    Rat w = (iso.second - iso.first) / 4;
    iso = refine_root(p, iso, w);
  }
}

namespace {

int rat_sign(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// value of u/v at a sample; reduced pair, so v(s)=0 implies u(s)!=0
XReal lambda_value(const UPoly& u, const UPoly& v, const Rat& s) {
  Rat vs = v.eval(s);
  if (vs == 0) return xinf();
  Rat r = u.eval(s) / vs;
  r.canonicalize();
  return xfin(r);
}

} // namespace

std::vector<XInterval> certified_value_arcs(const UPoly& u, const UPoly& v,
                                            const UPoly& guard, const Rat& lo,
                                            const Rat& hi,
                                            std::vector<Rat> samples,
                                            int max_subdivisions) {
  std::vector<XInterval> arcs;
  if (v.is_zero()) return arcs;
  samples.push_back(lo);
  samples.push_back(hi);
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  samples.erase(std::remove_if(samples.begin(), samples.end(),
                               [&](const Rat& s) { return s < lo || s > hi; }),
                samples.end());

  bool have_guard = !guard.is_zero() && guard.degree() >= 1;

  // subdivide gaps until each contains no interior denominator root
  int budget = max_subdivisions;
  for (size_t i = 0; i + 1 < samples.size() && budget > 0;) {
    const Rat& a = samples[i];
    const Rat& b = samples[i + 1];
    int interior = sturm_count(v, a, b) - (v.eval(b) == 0 ? 1 : 0);
    if (interior <= 0) {
      ++i;
      continue;
    }
    Rat m = (a + b) / 2;
    m.canonicalize();
    samples.insert(samples.begin() + static_cast<long>(i) + 1, m);
    --budget;
  }

  // per-sample point values (valid directional values where the guard is off)
  for (const Rat& s : samples) {
    if (have_guard && guard.eval(s) == 0) continue;
    arcs.push_back(XInterval::singleton(lambda_value(u, v, s)));
  }

  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    const Rat& a = samples[i];
    const Rat& b = samples[i + 1];
    if (have_guard && sturm_count(guard, a, b) + (guard.eval(a) == 0 ? 1 : 0) > 0)
      continue;  // the sweep identity is not certified across this gap
    int interior = sturm_count(v, a, b) - (v.eval(b) == 0 ? 1 : 0);
    if (interior > 0) continue;  // subdivision budget ran out here
    XReal va = lambda_value(u, v, a);
    XReal vb = lambda_value(u, v, b);
    Rat m = (a + b) / 2;
    m.canonicalize();
    int vsign = rat_sign(v.eval(m));
    if (vsign == 0) continue;  // midpoint happens to be the endpoint pole? skip
    if (va.is_finite() && vb.is_finite()) {
      arcs.push_back(XInterval(xfin(rat_min(va.value(), vb.value())),
                               xfin(rat_max(va.value(), vb.value()))));
    } else if (va.is_infinite() && vb.is_finite()) {
      int sigma = rat_sign(u.eval(a)) * vsign;
      if (sigma > 0)
        arcs.push_back(XInterval(vb, xinf()));
      else if (sigma < 0)
        arcs.push_back(XInterval(xinf(), vb));
    } else if (va.is_finite() && vb.is_infinite()) {
      int sigma = rat_sign(u.eval(b)) * vsign;
      if (sigma > 0)
        arcs.push_back(XInterval(va, xinf()));
      else if (sigma < 0)
        arcs.push_back(XInterval(xinf(), va));
    } else {
      int sl = rat_sign(u.eval(a)) * vsign;
      int sr = rat_sign(u.eval(b)) * vsign;
      XReal vm = lambda_value(u, v, m);
      if (sl != 0 && sr != 0 && sl != sr) {
        arcs.push_back(XInterval::full_circle());
      } else if (sl > 0) {
        arcs.push_back(XInterval(vm, xinf()));
      } else if (sl < 0) {
        arcs.push_back(XInterval(xinf(), vm));
      }
    }
  }
  return arc_union_normalize(std::move(arcs));
}

} // namespace graphoid
