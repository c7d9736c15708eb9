#pragma once

#include "graphoid/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace graphoid {

enum class Rel { GreaterZero, LessZero, NonZero };

std::string rel_to_string(Rel r);
Rel rel_from_string(const std::string& s);

struct Constraint {
  Poly poly;
  Rel rel;
};

// Which target class and denominator sign branch a constraint group came
// from (the E = E- u E0 u E+ bookkeeping).
enum class TargetClass { Finite, PlusInfinity, MinusInfinity };

struct BranchLabel {
  std::string member_id;
  TargetClass klass;
  Rat alpha, beta;
  int q_sign;  // +1 or -1
};

struct InequalitySystem {
  std::vector<Constraint> constraints;
  Box region;
  std::vector<BranchLabel> labels;

  explicit InequalitySystem(Box r) : region(std::move(r)) {}
};

// Open target arc for one family member: the open interval ]alpha, beta[
// when infinity_type is false, the complement of [alpha, beta] otherwise.
struct Target {
  Rat alpha, beta;
  bool infinity_type = false;
};

// One inequality system per combination of denominator sign branches (and
// of the two divergence classes for infinity targets); the disjunction of
// the systems is equivalent to "f(point) in target(f) for every f" away
// from denominator zero sets.
std::vector<InequalitySystem> build_system(const FunctionFamily& E,
                                           const std::vector<Target>& targets,
                                           const Box& region);

struct CoverBox {
  // chart tags per coordinate: false = direct, true = inverted (1/x)
  std::vector<bool> inverted;
  std::vector<BInt> ranges;
  size_t violated_constraint;
};

struct FeasibilityVerdict {
  enum class Kind { Witness, Infeasible, Unknown } kind;
  std::vector<Rat> witness;     // exact rational point, re-verified
  std::vector<CoverBox> cover;  // certified empty cover of the region
  int depth_reached = 0;
  long boxes_processed = 0;
};

struct FeasOptions {
  int max_depth = 40;
  long max_boxes = 1000000;
  // line-probe cadence: 1-d exact solves along axis lines through box
  // centers run at shallow depths and then every probe_period levels
  int probe_period = 5;
};

// Sound tri-state search: Witness points satisfy every strict constraint
// under exact evaluation; Infeasible covers the whole region by boxes with
// a certified violated constraint each; Unknown on budget exhaustion.
FeasibilityVerdict feasible(const InequalitySystem& sys, const FeasOptions& opts = {});

} // namespace graphoid
