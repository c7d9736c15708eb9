#include "graphoid/membership.hpp"

#include <stdexcept>

namespace graphoid {

const XReal& GraphoidPoint::value_of(const std::string& id) const {
  for (const auto& [k, v] : values)
    if (k == id) return v;
  throw std::out_of_range("graphoid point has no value for member " + id);
}

bool GraphoidPoint::has_value(const std::string& id) const {
  for (const auto& [k, v] : values)
    if (k == id) return true;
  return false;
}

namespace {

// Shrink an inner ball arc slightly so membership implies strict distance.
XInterval nudge_inward(const XInterval& arc) {
  if (arc.is_full() || arc.is_singleton()) return arc;
  if (arc.lo().is_finite() && arc.hi().is_finite() &&
      arc.lo().value() < arc.hi().value()) {
    Rat w = (arc.hi().value() - arc.lo().value()) / 1048576;
    return XInterval(xfin(arc.lo().value() + w), xfin(arc.hi().value() - w));
  }
  if (arc.lo().is_finite() && arc.hi().is_finite()) {
    // complement-type arc {t >= lo} u {t <= hi}: push endpoints outward
    Rat w = rat_max(rat_abs(arc.lo().value()), rat_abs(arc.hi().value())) / 1048576 + Rat(1, 1048576);
    return XInterval(xfin(arc.lo().value() + w), xfin(arc.hi().value() - w));
  }
  return arc;
}

Target target_for_value(const XReal& b, const Rat& rho) {
  if (b.is_infinite()) {
    XInterval ball = nudge_inward(chordal_ball_arc(b, rho, false));
    if (ball.is_full() || !ball.lo().is_finite() || !ball.hi().is_finite())
      return Target{Rat(-1), Rat(1), true};  // huge radius: any inf-branch works
    // ball = {t >= M} u {inf} u {t <= -M'}: complement of [hi, lo]
    return Target{ball.hi().value(), ball.lo().value(), true};
  }
  Rat r = rho;
  XInterval ball = chordal_ball_arc(b, r, false);
  int guard = 0;
  while ((ball.is_full() || ball.contains_infinity()) && guard++ < 64) {
    r /= 2;
    ball = chordal_ball_arc(b, r, false);
  }
  ball = nudge_inward(ball);
  return Target{ball.lo().value(), ball.hi().value(), false};
}

bool witness_verifies(const GraphoidPoint& pt, const FunctionFamily& E,
                      const std::vector<Rat>& w, const Rat& rho) {
  Rat rho2 = rho * rho;
  for (size_t i = 0; i < pt.base.size(); ++i)
    if (!(chordal_sq(xfin(w[i]), pt.base[i]) < rho2)) return false;
  for (const auto& m : E.members()) {
    auto v = eval_exact(m.f, w[0], w.size() > 1 ? w[1] : Rat(0));
    if (!v) return false;  // outside dom(E)
    if (!(chordal_sq(*v, pt.value_of(m.id)) < rho2)) return false;
  }
  return true;
}

} // namespace

MembershipVerdict member(const GraphoidPoint& point, const FunctionFamily& E,
                         const std::vector<Rat>& radii, const MemberOptions& opts) {
  size_t n = static_cast<size_t>(E.arity());
  if (point.base.size() != n)
    throw std::invalid_argument("graphoid point arity does not match the family");
  for (const auto& m : E.members())
    if (!point.has_value(m.id))
      throw std::invalid_argument("graphoid point misses a value for " + m.id);
  if (radii.empty() || !(radii.back() > 0))
    throw std::invalid_argument("radii must be nonempty, decreasing and positive");
  for (size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i] > radii[i + 1]))
      throw std::invalid_argument("radii must be strictly decreasing");

  MembershipVerdict verdict;
  verdict.kind = MembershipVerdict::Kind::Unknown;

  for (const Rat& rho : radii) {
    ++verdict.radii_processed;

    // Exclusion first: an enclosure disjoint from the value ball refutes
    // membership outright.
    for (long shrink : opts.exclusion_shrinks) {
      Rat r = rho / shrink;
      std::vector<XInterval> coords;
      for (size_t i = 0; i < n; ++i)
        coords.push_back(chordal_ball_arc(point.base[i], r, true));
      Box nb(coords);
      for (const auto& m : E.members()) {
        XInterval enclosure = eval_interval(m.f, nb);
        XInterval value_ball = chordal_ball_arc(point.value_of(m.id), rho, true);
        if (!arcs_intersect(enclosure, value_ball)) {
          verdict.kind = MembershipVerdict::Kind::Excluded;
          verdict.excluded_radius = rho;
          verdict.excluded_member = m.id;
          verdict.exclusion_box = nb;
          return verdict;
        }
      }
    }

    // Confirmation: search for an exact witness of the rho-neighborhood
    // condition through the sign-branch systems.
    std::vector<XInterval> region_coords;
    for (size_t i = 0; i < n; ++i)
      region_coords.push_back(
          nudge_inward(chordal_ball_arc(point.base[i], rho, false)));
    Box region(region_coords);
    std::vector<Target> targets;
    for (const auto& m : E.members())
      targets.push_back(target_for_value(point.value_of(m.id), rho));

    std::vector<InequalitySystem> systems = build_system(E, targets, region);
    bool found = false;
    bool all_infeasible = true;
    std::vector<CoverBox> cover;
    for (const InequalitySystem& sys : systems) {
      FeasibilityVerdict fv = feasible(sys, opts.feas);
      if (fv.kind == FeasibilityVerdict::Kind::Witness) {
        std::vector<Rat> w = fv.witness;
        if (w.size() < n) w.resize(n, Rat(0));
        if (witness_verifies(point, E, w, rho)) {
          verdict.witnesses.push_back({rho, w});
          verdict.confirmed_radius = rho;
          found = true;
          all_infeasible = false;
          break;
        }
        all_infeasible = false;
      } else if (fv.kind == FeasibilityVerdict::Kind::Unknown) {
        all_infeasible = false;
      } else {
        cover.insert(cover.end(), fv.cover.begin(), fv.cover.end());
      }
    }
    if (found) continue;

    if (all_infeasible) {
      // No sign-branch admits a witness in the open neighborhood; by the
      // density of each branch around denominator zeros this refutes the
      // neighborhood condition. Prefer a single-member enclosure
      // certificate when one exists at a smaller box.
      for (long shrink : {64L, 256L}) {
        Rat r = rho / shrink;
        std::vector<XInterval> coords;
        for (size_t i = 0; i < n; ++i)
          coords.push_back(chordal_ball_arc(point.base[i], r, true));
        Box nb(coords);
        for (const auto& m : E.members()) {
          XInterval enclosure = eval_interval(m.f, nb);
          XInterval value_ball = chordal_ball_arc(point.value_of(m.id), rho, true);
          if (!arcs_intersect(enclosure, value_ball)) {
            verdict.kind = MembershipVerdict::Kind::Excluded;
            verdict.excluded_radius = rho;
            verdict.excluded_member = m.id;
            verdict.exclusion_box = nb;
            return verdict;
          }
        }
      }
      verdict.kind = MembershipVerdict::Kind::Excluded;
      verdict.excluded_radius = rho;
      verdict.exclusion_cover = std::move(cover);
      return verdict;
    }

    // neither confirmed nor refuted at this radius
    verdict.kind = MembershipVerdict::Kind::Unknown;
    return verdict;
  }

  verdict.kind = MembershipVerdict::Kind::ConfirmedToRadius;
  return verdict;
}

XReal one_var_extension(const RatFunc& f, const XReal& a) {
  if (f.depends_on_y())
    throw std::invalid_argument("one_var_extension needs a one-variable function");
  UPoly p = f.num().to_upoly_x();
  UPoly q = f.den().to_upoly_x();
  if (a.is_finite()) {
    Rat qv = q.eval(a.value());
    if (qv != 0) {
      Rat v = p.eval(a.value()) / qv;
      v.canonicalize();
      return xfin(v);
    }
    return xinf();  // lowest terms: p and q share no root
  }
  int dp = p.degree(), dq = q.degree();
  if (p.is_zero()) return xfin(Rat(0));
  if (dp > dq) return xinf();
  if (dp < dq) return xfin(Rat(0));
  Rat v = p.leading() / q.leading();
  v.canonicalize();
  return xfin(v);
}

} // namespace graphoid
