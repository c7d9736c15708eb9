#include "graphoid/membership.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace graphoid {

namespace {

// dyadic jitter in [1/2, 1)
Rat draw_jitter(std::mt19937_64& rng) {
  return Rat(32768 + static_cast<long>(rng() % 32768), 65536);
}

struct CoordSampler {
  bool at_infinity;
  Rat center;     // finite case
  Rat offset_cap; // finite: max |offset|; infinite: max |1/x|
};

CoordSampler make_sampler(const XReal& a, const Rat& radius) {
  CoordSampler s;
  s.at_infinity = a.is_infinite();
  XInterval ball = chordal_ball_arc(a, radius, false);
  if (s.at_infinity) {
    s.center = 0;
    if (ball.is_full() || !ball.lo().is_finite() || ball.lo().value() <= 0)
      s.offset_cap = Rat(1);
    else {
      s.offset_cap = Rat(1) / (2 * ball.lo().value());
      s.offset_cap.canonicalize();
    }
    return s;
  }
  s.center = a.value();
  if (ball.is_full() || ball.contains_infinity() || !ball.lo().is_finite() ||
      !ball.hi().is_finite()) {
    s.offset_cap = Rat(1, 2);
  } else {
    Rat lo_gap = s.center - ball.lo().value();
    Rat hi_gap = ball.hi().value() - s.center;
    s.offset_cap = rat_min(lo_gap, hi_gap) / 2;
    s.offset_cap.canonicalize();
  }
  if (s.offset_cap <= 0) s.offset_cap = Rat(1, 1048576);
  return s;
}

Rat sample_coord(const CoordSampler& s, const Rat& dir, const Rat& scale) {
  if (!s.at_infinity) return s.center + dir * s.offset_cap * scale;
  if (dir == 0) return Rat(1) / (s.offset_cap * scale);  // arbitrary large point
  Rat u = s.offset_cap * scale * (dir > 0 ? Rat(1) : Rat(-1));
  Rat x = Rat(1) / u;
  x.canonicalize();
  return x;
}

} // namespace

FiberCloud fiber_sample(const FunctionFamily& E, const std::vector<XReal>& at,
                        size_t count, const Rat& radius, uint64_t seed) {
  if (count < 1) throw std::invalid_argument("fiber_sample needs count >= 1");
  size_t n = static_cast<size_t>(E.arity());
  if (at.size() != n)
    throw std::invalid_argument("base point arity does not match the family");

  std::mt19937_64 rng(seed);
  FiberCloud cloud;
  for (const auto& m : E.members()) cloud.member_ids.push_back(m.id);

  std::vector<CoordSampler> samplers;
  for (size_t i = 0; i < n; ++i) samplers.push_back(make_sampler(at[i], radius));

  // stratified directions: all reduced slopes of a small farey order on
  // both axes, so every directional limit class gets sampled early
  std::vector<std::vector<Rat>> dirs;
  unsigned order = 2;
  while (dirs.size() < 2 * count) {
    dirs.clear();
    if (n == 1) {
      dirs.push_back({Rat(1)});
      dirs.push_back({Rat(-1)});
      break;
    }
    for (long den = 1; den <= static_cast<long>(order); ++den) {
      for (long num = -den; num <= den; ++num) {
        if (std::gcd(num < 0 ? -num : num, den) != 1) continue;  // reduced only
        Rat m(num, den);
        m.canonicalize();
        dirs.push_back({Rat(1), m});
        dirs.push_back({Rat(-1), -m});
        if (m != 0) {
          dirs.push_back({m, Rat(1)});
          dirs.push_back({-m, Rat(-1)});
        } else {
          dirs.push_back({Rat(0), Rat(1)});
          dirs.push_back({Rat(0), Rat(-1)});
        }
      }
    }
    if (order > 64) break;
    order += 2;
  }

  Rat rho2 = radius * radius;
  size_t attempts = 0, max_attempts = 8 * count + 64;
  for (size_t i = 0; cloud.samples.size() < count && attempts < max_attempts; ++i) {
    ++attempts;
    const std::vector<Rat>& dir = dirs[i % dirs.size()];
    long level = static_cast<long>(i / dirs.size());
    Rat scale = draw_jitter(rng);
    for (long l = 0; l < level; ++l) scale /= 2;

    // normalize so the largest direction component has size one
    Rat mx(0);
    for (const Rat& d : dir) mx = rat_max(mx, rat_abs(d));
    if (mx == 0) continue;

    FiberSample sample;
    bool ok = true;
    for (size_t c = 0; c < n; ++c) {
      Rat d = dir[c] / mx;
      d.canonicalize();
      Rat v = sample_coord(samplers[c], d, scale);
      v.canonicalize();
      sample.witness.push_back(v);
      if (!(chordal_sq(xfin(v), at[c]) < rho2)) ok = false;
    }
    if (!ok) continue;
    bool moved = false;
    for (size_t c = 0; c < n; ++c)
      if (!(at[c].is_finite() && sample.witness[c] == at[c].value())) moved = true;
    if (!moved) continue;
    for (const auto& m : E.members()) {
      auto v = eval_exact(m.f, sample.witness[0],
                          n > 1 ? sample.witness[1] : Rat(0));
      if (!v) {
        ok = false;
        break;
      }
      sample.values.push_back(*v);
    }
    if (!ok) continue;
    cloud.samples.push_back(std::move(sample));
  }
  if (cloud.samples.empty())
    throw std::logic_error("fiber_sample: the punctured ball misses dom(E)");

  // report the epsilon for which the distinct values form an epsilon-net of
  // the cloud (exact duplicates from opposite approach directions ignored)
  cloud.eps_net_sq = Rat(0);
  for (size_t i = 0; i < cloud.samples.size(); ++i) {
    Rat nearest(-1);
    for (size_t j = 0; j < cloud.samples.size(); ++j) {
      if (i == j) continue;
      Rat d2(0);
      for (size_t k = 0; k < cloud.member_ids.size(); ++k)
        d2 += chordal_sq(cloud.samples[i].values[k], cloud.samples[j].values[k]);
      if (d2 == 0) continue;
      if (nearest < 0 || d2 < nearest) nearest = d2;
    }
    if (nearest > cloud.eps_net_sq) cloud.eps_net_sq = nearest;
  }
  return cloud;
}

} // namespace graphoid
