#include "graphoid/feasibility.hpp"

#include "graphoid/roots.hpp"

#include <deque>
#include <stdexcept>

namespace graphoid {

std::string rel_to_string(Rel r) {
  switch (r) {
    case Rel::GreaterZero: return ">0";
    case Rel::LessZero: return "<0";
    case Rel::NonZero: return "!=0";
  }
  return "?";
}

Rel rel_from_string(const std::string& s) {
  if (s == ">0") return Rel::GreaterZero;
  if (s == "<0") return Rel::LessZero;
  if (s == "!=0") return Rel::NonZero;
  throw std::invalid_argument("unknown relation: " + s);
}

namespace {

struct MemberBranch {
  std::vector<Constraint> constraints;
  BranchLabel label;
};

std::vector<MemberBranch> member_branches(const FamilyMember& m, const Target& t) {
  if (t.alpha >= t.beta)
    throw std::invalid_argument("target endpoints must satisfy alpha < beta for " + m.id);
  const Poly& p = m.f.num();
  const Poly& q = m.f.den();
  bool q_const = q.is_constant();
  std::vector<MemberBranch> out;

  auto with_sign = [&](int s, TargetClass klass, std::vector<Constraint> cs) {
    if (!q_const) {
      cs.insert(cs.begin(), Constraint{q, s > 0 ? Rel::GreaterZero : Rel::LessZero});
    }
    out.push_back(MemberBranch{std::move(cs), BranchLabel{m.id, klass, t.alpha, t.beta, s}});
  };

  if (!t.infinity_type) {
    // alpha q < p < beta q under q > 0; all three flipped under q < 0
    with_sign(1, TargetClass::Finite,
              {Constraint{p - q.scaled(t.alpha), Rel::GreaterZero},
               Constraint{q.scaled(t.beta) - p, Rel::GreaterZero}});
    if (!q_const)
      with_sign(-1, TargetClass::Finite,
                {Constraint{p - q.scaled(t.alpha), Rel::LessZero},
                 Constraint{q.scaled(t.beta) - p, Rel::LessZero}});
  } else {
    with_sign(1, TargetClass::PlusInfinity,
              {Constraint{p - q.scaled(t.beta), Rel::GreaterZero}});
    with_sign(1, TargetClass::MinusInfinity,
              {Constraint{q.scaled(t.alpha) - p, Rel::GreaterZero}});
    if (!q_const) {
      with_sign(-1, TargetClass::PlusInfinity,
                {Constraint{p - q.scaled(t.beta), Rel::LessZero}});
      with_sign(-1, TargetClass::MinusInfinity,
                {Constraint{q.scaled(t.alpha) - p, Rel::LessZero}});
    }
  }
  return out;
}

} // namespace

std::vector<InequalitySystem> build_system(const FunctionFamily& E,
                                           const std::vector<Target>& targets,
                                           const Box& region) {
  if (targets.size() != E.size())
    throw std::invalid_argument("one target per family member required");
  std::vector<std::vector<MemberBranch>> per_member;
  for (size_t i = 0; i < E.size(); ++i)
    per_member.push_back(member_branches(E.members()[i], targets[i]));

  std::vector<InequalitySystem> systems;
  std::vector<size_t> pick(per_member.size(), 0);
  for (;;) {
    InequalitySystem sys(region);
    for (size_t i = 0; i < per_member.size(); ++i) {
      const MemberBranch& b = per_member[i][pick[i]];
      sys.constraints.insert(sys.constraints.end(), b.constraints.begin(),
                             b.constraints.end());
      sys.labels.push_back(b.label);
    }
    systems.push_back(std::move(sys));
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == per_member[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }
  return systems;
}

namespace {

// One chart combination of the region with the transformed constraints.
struct ChartedSystem {
  std::vector<bool> inverted;  // per coordinate
  std::vector<BInt> start;     // starting ranges, within [-1, 1]
  std::vector<Constraint> constraints;  // transformed, sign-adjusted
};

// Split a chart piece at u = 0 so each sub-piece has a definite sign. The
// bare point u = 0 is the point at infinity and holds no real points.
void split_signed(const ChartPiece& piece, std::vector<std::pair<bool, BInt>>& out) {
  if (piece.inverted && piece.range.is_point() && piece.range.lo == 0) return;
  if (!piece.inverted || !piece.range.contains_zero() || piece.range.is_point()) {
    out.push_back({piece.inverted, piece.range});
    return;
  }
  if (piece.range.lo < 0) out.push_back({piece.inverted, BInt(piece.range.lo, Rat(0))});
  if (piece.range.hi > 0) out.push_back({piece.inverted, BInt(Rat(0), piece.range.hi)});
}

struct SearchBox {
  std::vector<BInt> ranges;
  int depth;
};

class Engine {
public:
  Engine(const InequalitySystem& sys, const FeasOptions& opts)
      : sys_(sys), opts_(opts), n_(sys.region.arity()) {
    build_charts();
  }

  FeasibilityVerdict run() {
    FeasibilityVerdict v;
    v.kind = FeasibilityVerdict::Kind::Infeasible;
    long boxes = 0;
    int max_depth_seen = 0;
    bool exhausted = false;
    for (size_t ci = 0; ci < charts_.size(); ++ci) {
      const ChartedSystem& cs = charts_[ci];
      std::deque<SearchBox> queue;
      queue.push_back(SearchBox{cs.start, 0});
      while (!queue.empty()) {
        if (boxes >= opts_.max_boxes) {
          exhausted = true;
          break;
        }
        SearchBox box = std::move(queue.front());
        queue.pop_front();
        ++boxes;
        max_depth_seen = std::max(max_depth_seen, box.depth);

        size_t violated;
        if (prunable(cs, box.ranges, violated)) {
          v.cover.push_back(CoverBox{cs.inverted, box.ranges, violated});
          continue;
        }
        if (try_witness(cs, box, v)) {
          v.kind = FeasibilityVerdict::Kind::Witness;
          v.depth_reached = max_depth_seen;
          v.boxes_processed = boxes;
          return v;
        }
        if (box.depth >= opts_.max_depth) {
          exhausted = true;
          continue;
        }
        bool splittable = false;
        for (const BInt& r : box.ranges)
          if (!r.is_point()) splittable = true;
        if (!splittable) {
          // a single unresolved real point cannot occur (point enclosures
          // are exact), but stay sound if it ever does
          exhausted = true;
          continue;
        }
        size_t axis = widest_axis(box.ranges);
        Rat mid = box.ranges[axis].mid();
        mid.canonicalize();
        SearchBox left = box, right = box;
        left.ranges[axis] = BInt(box.ranges[axis].lo, mid);
        right.ranges[axis] = BInt(mid, box.ranges[axis].hi);
        left.depth = right.depth = box.depth + 1;
        queue.push_back(std::move(left));
        queue.push_back(std::move(right));
      }
      if (exhausted) break;
    }
    v.depth_reached = max_depth_seen;
    v.boxes_processed = boxes;
    if (exhausted) {
      v.kind = FeasibilityVerdict::Kind::Unknown;
      v.cover.clear();
    }
    return v;
  }

private:
  void build_charts() {
    std::vector<std::vector<std::pair<bool, BInt>>> per_coord(n_);
    for (size_t i = 0; i < n_; ++i) {
      for (const ChartPiece& piece : arc_chart_pieces(sys_.region.coords[i]))
        split_signed(piece, per_coord[i]);
      if (per_coord[i].empty()) return;  // empty region
    }
    std::vector<size_t> pick(n_, 0);
    for (;;) {
      ChartedSystem cs;
      for (size_t i = 0; i < n_; ++i) {
        cs.inverted.push_back(per_coord[i][pick[i]].first);
        cs.start.push_back(per_coord[i][pick[i]].second);
      }
      for (const Constraint& c : sys_.constraints) {
        Poly tp = c.poly;
        bool flip = false;
        if (n_ >= 1 && cs.inverted[0]) {
          int dx = std::max(tp.degree_x(), 0);
          tp = tp.chart_flip_x();
          if (dx % 2 == 1 && cs.start[0].hi <= 0) flip = !flip;
        }
        if (n_ >= 2 && cs.inverted[1]) {
          int dy = std::max(tp.degree_y(), 0);
          tp = tp.chart_flip_y();
          if (dy % 2 == 1 && cs.start[1].hi <= 0) flip = !flip;
        }
        Rel r = c.rel;
        if (flip && r == Rel::GreaterZero) r = Rel::LessZero;
        else if (flip && r == Rel::LessZero) r = Rel::GreaterZero;
        cs.constraints.push_back(Constraint{std::move(tp), r});
      }
      charts_.push_back(std::move(cs));
      size_t i = 0;
      while (i < n_ && ++pick[i] == per_coord[i].size()) {
        pick[i] = 0;
        ++i;
      }
      if (i == n_) break;
    }
  }

  bool prunable(const ChartedSystem& cs, const std::vector<BInt>& ranges,
                size_t& violated) const {
    for (size_t k = 0; k < cs.constraints.size(); ++k) {
      const Constraint& c = cs.constraints[k];
      BInt e = n_ == 1 ? c.poly.eval(ranges[0], BInt::point(Rat(0)))
                       : c.poly.eval(ranges[0], ranges[1]);
      bool bad = false;
      switch (c.rel) {
        case Rel::GreaterZero: bad = e.hi <= 0; break;
        case Rel::LessZero: bad = e.lo >= 0; break;
        case Rel::NonZero: bad = e.lo == 0 && e.hi == 0; break;
      }
      if (bad) {
        violated = k;
        return true;
      }
    }
    return false;
  }

  // map a chart-coordinate candidate back to the original coordinates
  bool to_original(const ChartedSystem& cs, const std::vector<Rat>& pt,
                   std::vector<Rat>& out) const {
    out.clear();
    for (size_t i = 0; i < n_; ++i) {
      if (cs.inverted[i]) {
        if (pt[i] == 0) return false;  // the point at infinity
        Rat x = Rat(1) / pt[i];
        x.canonicalize();
        out.push_back(x);
      } else {
        out.push_back(pt[i]);
      }
    }
    return true;
  }

  bool exact_ok(const std::vector<Rat>& orig) const {
    for (size_t i = 0; i < n_; ++i)
      if (!sys_.region.coords[i].contains(xfin(orig[i]))) return false;
    for (const Constraint& c : sys_.constraints) {
      Rat v = n_ == 1 ? c.poly.eval(orig[0], Rat(0)) : c.poly.eval(orig[0], orig[1]);
      switch (c.rel) {
        case Rel::GreaterZero:
          if (!(v > 0)) return false;
          break;
        case Rel::LessZero:
          if (!(v < 0)) return false;
          break;
        case Rel::NonZero:
          if (v == 0) return false;
          break;
      }
    }
    return true;
  }

  bool accept_candidate(const ChartedSystem& cs, const std::vector<Rat>& pt,
                        FeasibilityVerdict& v) const {
    std::vector<Rat> orig;
    if (!to_original(cs, pt, orig)) return false;
    if (!exact_ok(orig)) return false;
    v.witness = orig;
    return true;
  }

  // Exact 1-d feasibility along an axis line through the box center:
  // isolate the roots of every constraint restricted to the line and test
  // the midpoints of the root-free spans.
  bool line_probe(const ChartedSystem& cs, const SearchBox& box, size_t axis,
                  FeasibilityVerdict& v) const {
    std::vector<Rat> fixed(n_);
    for (size_t i = 0; i < n_; ++i) fixed[i] = box.ranges[i].mid();
    std::vector<UPoly> restricted;
    for (const Constraint& c : cs.constraints) {
      UPoly u;
      if (n_ == 1) {
        u = c.poly.substitute_y(UPoly::constant(Rat(0)));
      } else if (axis == 0) {
        u = c.poly.substitute_y(UPoly::constant(fixed[1]));
      } else {
        u = c.poly.substitute_x(UPoly::constant(fixed[0]));
      }
      if (u.is_zero()) {
        // identically zero on the line: strict and nonzero relations fail
        return false;
      }
      restricted.push_back(std::move(u));
    }
    const BInt& span = box.ranges[axis];
    std::vector<Rat> breaks{span.lo, span.hi};
    // isolating intervals must be tight, or roots of different constraints
    // hide the sign regions between them
    Rat tight = span.width();
    for (int i = 0; i < 48; ++i) tight /= 2;
    if (tight == 0) tight = Rat(1, 1000000);
    for (const UPoly& u : restricted) {
      for (auto iso : isolate_real_roots(u)) {
        if (iso.second < span.lo || iso.first > span.hi) continue;
        if (iso.second - iso.first > tight) iso = refine_root(u, iso, tight);
        breaks.push_back(rat_max(iso.first, span.lo));
        breaks.push_back(rat_min(iso.second, span.hi));
      }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<Rat> candidates;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
      Rat m = (breaks[i] + breaks[i + 1]) / 2;
      m.canonicalize();
      candidates.push_back(m);
    }
    candidates.push_back(span.lo);
    candidates.push_back(span.hi);
    for (const Rat& c : candidates) {
      std::vector<Rat> pt = fixed;
      pt[axis] = c;
      if (accept_candidate(cs, pt, v)) return true;
    }
    return false;
  }

  bool try_witness(const ChartedSystem& cs, const SearchBox& box,
                   FeasibilityVerdict& v) const {
    std::vector<Rat> center(n_);
    for (size_t i = 0; i < n_; ++i) center[i] = box.ranges[i].mid();
    if (accept_candidate(cs, center, v)) return true;
    bool probe = box.depth <= 2 ||
                 (opts_.probe_period > 0 && box.depth % opts_.probe_period == 0);
    if (probe) {
      for (size_t axis = 0; axis < n_; ++axis)
        if (line_probe(cs, box, axis, v)) return true;
    }
    return false;
  }

  size_t widest_axis(const std::vector<BInt>& ranges) const {
    size_t best = 0;
    Rat best_w(-1);
    for (size_t i = 0; i < ranges.size(); ++i) {
      Rat w = chordal_sq(xfin(ranges[i].lo), xfin(ranges[i].hi));
      if (w > best_w) {
        best_w = w;
        best = i;
      }
    }
    return best;
  }

  const InequalitySystem& sys_;
  const FeasOptions& opts_;
  size_t n_;
  std::vector<ChartedSystem> charts_;
};

} // namespace

FeasibilityVerdict feasible(const InequalitySystem& sys, const FeasOptions& opts) {
  if (sys.region.arity() < 1 || sys.region.arity() > 2)
    throw std::invalid_argument("feasible: only 1 or 2 variables supported");
  Engine e(sys, opts);
  return e.run();
}

} // namespace graphoid
