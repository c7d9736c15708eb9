#pragma once

#include "graphoid/xreal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace graphoid {

// Finite sample of S^m with the product chordal metric.
struct PointCloud {
  size_t arity = 1;
  std::vector<std::vector<XReal>> points;
  std::vector<std::string> provenance;  // optional witness tags, may be empty

  // squared product-metric distance between two points
  Rat dist_sq(size_t i, size_t j) const;
};

struct RipsSummary {
  Rat scale;
  size_t vertices = 0, edges = 0, triangles = 0;
  size_t betti0 = 0, betti1 = 0;

  bool operator==(const RipsSummary& o) const {
    return betti0 == o.betti0 && betti1 == o.betti1;
  }
};

// Vietoris-Rips complex at scale eps with simplices up to dimension 2;
// Betti numbers over the two-element field by boundary-matrix reduction.
RipsSummary rips_betti(const PointCloud& cloud, const Rat& eps);

struct StableRange {
  std::vector<std::pair<Rat, RipsSummary>> summaries;
  // longest run of the grid with constant (b0, b1): [first, last] indices
  size_t run_begin = 0, run_end = 0;
  size_t run_betti0 = 0, run_betti1 = 0;
};

// Poor-man's persistence: the summary at every grid scale plus the longest
// constant-(b0, b1) run.
StableRange stable_range(const PointCloud& cloud, const std::vector<Rat>& eps_grid);

} // namespace graphoid
