#pragma once

#include "graphoid/feasibility.hpp"
#include "graphoid/ratfunc.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace graphoid {

// Candidate graphoid point: base in S^n plus one value per family member.
struct GraphoidPoint {
  std::vector<XReal> base;
  std::vector<std::pair<std::string, XReal>> values;

  const XReal& value_of(const std::string& id) const;
  bool has_value(const std::string& id) const;
};

struct MembershipVerdict {
  enum class Kind { ConfirmedToRadius, Excluded, Unknown } kind;

  // ConfirmedToRadius: the smallest confirmed radius and one exact witness
  // per tested radius (all re-verified by exact evaluation).
  Rat confirmed_radius;
  std::vector<std::pair<Rat, std::vector<Rat>>> witnesses;

  // Excluded: the refuted radius plus evidence. The usual certificate is a
  // member whose interval enclosure over a neighborhood box misses the
  // value ball; when exclusion was instead established by an infeasible
  // branch cover, member_id is empty and the cover is attached.
  Rat excluded_radius;
  std::string excluded_member;
  std::optional<Box> exclusion_box;
  std::vector<CoverBox> exclusion_cover;

  int radii_processed = 0;
};

struct MemberOptions {
  FeasOptions feas;
  // shrink factors tried for the exclusion box at each radius
  std::vector<long> exclusion_shrinks{1, 4, 16};
};

// Lemma-style membership check at a schedule of shrinking radii: every
// radius confirmed by an exact witness gives ConfirmedToRadius (evidence);
// a certified empty neighborhood at any radius gives Excluded (proof).
MembershipVerdict member(const GraphoidPoint& point, const FunctionFamily& E,
                         const std::vector<Rat>& radii,
                         const MemberOptions& opts = {});

// The continuous extension S -> S of a one-variable rational function:
// exact value where defined, inf at denominator roots, leading-term limit
// at a = inf.
XReal one_var_extension(const RatFunc& f, const XReal& a);

// Fiber of the graphoid over a point, approximated from inside and outside
// by finite unions of closed arcs.
struct ClusterSet {
  std::vector<XInterval> inner;  // certified subset of the cluster set
  std::vector<XInterval> outer;  // certified superset of the cluster set
};

struct ClusterBudget {
  int t_subdiv_log2 = 10;        // direction cells per blow-up chart
  Rat radial_eps = Rat(1, 1000000);
  Rat shrink_target_diam = Rat(1, 10000);  // for continuity/pole points
  int max_shrink_steps = 60;
  unsigned farey_order = 32;     // directional probe slopes
};

ClusterSet cluster_set(const RatFunc& f, const std::vector<XReal>& at,
                       const ClusterBudget& budget = {});

// Point cloud sampled from a graphoid fiber: stratified rational witnesses
// in the punctured ball around the base, with exact member values.
struct FiberSample {
  std::vector<Rat> witness;
  std::vector<XReal> values;  // aligned with the family member order
};

struct FiberCloud {
  std::vector<std::string> member_ids;
  std::vector<FiberSample> samples;
  // squared chordal bound on the largest nearest-neighbor gap among values
  Rat eps_net_sq;
};

FiberCloud fiber_sample(const FunctionFamily& E, const std::vector<XReal>& at,
                        size_t count, const Rat& radius, uint64_t seed);

} // namespace graphoid
