#pragma once

#include "graphoid/arc.hpp"
#include "graphoid/upoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace graphoid {

// Number of distinct real roots of p in the half-open interval (a, b],
// by Sturm sign-variation counting on the squarefree part.
int sturm_count(const UPoly& p, const Rat& a, const Rat& b);

// Distinct real roots on the whole line; the bound is 1 + max|a_i/a_d|.
int sturm_count_all(const UPoly& p);

// Strict upper bound on the absolute value of every real root.
Rat root_bound(const UPoly& p);

// Isolating intervals [lo, hi] for all distinct real roots, sorted
// ascending: lo < hi, neither endpoint a root, exactly one root inside.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UPoly& p);

// Shrink an isolating interval below the given width (endpoints stay
// non-roots, the root stays inside).
std::pair<Rat, Rat> refine_root(const UPoly& p, std::pair<Rat, Rat> iso,
                                const Rat& width);

// Exact sign of the real algebraic number in the isolating interval when
// evaluated by g: refines until the interval enclosure of g decides.
int sign_at_root(const UPoly& p, std::pair<Rat, Rat> iso, const UPoly& g);

// Certified subsets of the closed value set of the rational function u/v
// (reduced: gcd(u,v) = 1) over [lo, hi]: arcs built from intermediate-value
// sweeps between consecutive samples, with Sturm checks that gaps are free
// of denominator roots (and of guard roots, where the guard is nonzero);
// poles contribute signed divergence arcs. Every returned arc is contained
// in closure({u(t)/v(t)} u {inf at poles}) over the sampled range.
std::vector<XInterval> certified_value_arcs(const UPoly& u, const UPoly& v,
                                            const UPoly& guard, const Rat& lo,
                                            const Rat& hi,
                                            std::vector<Rat> samples,
                                            int max_subdivisions = 64);

} // namespace graphoid
