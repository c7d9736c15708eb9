#pragma once

#include "graphoid/membership.hpp"
#include "graphoid/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace graphoid {

// ---- finite place tables ------------------------------------------------

struct PlaceRelation {
  std::string f, g, h;  // h recorded as f+g or f*g
};

// Finite restriction of a candidate place: entries keyed by canonical
// expression text, plus explicitly recorded arithmetic relations.
struct PlaceTable {
  std::vector<std::pair<std::string, XReal>> entries;
  std::vector<PlaceRelation> sums;
  std::vector<PlaceRelation> products;

  bool has_entry(const std::string& key) const;
  const XReal& entry(const std::string& key) const;
  void set_entry(const std::string& key, const XReal& v);
};

struct PlaceViolation {
  std::string description;
};

// Empty iff 0 -> 0, 1 -> 1 and every recorded relation lands inside the
// multivalued sum/product of its operands.
std::vector<PlaceViolation> check_place_table(const PlaceTable& t);

// The place delta_gamma read off a graphoid point: member values, exact
// constants, coordinate entries, and every relation among table keys that
// can be recognized by exact arithmetic. Explicitly requested relations
// whose compound is missing raise an error instead of being dropped.
struct DeltaRelationRequest {
  std::string f, g, h;
  bool is_product;
};
PlaceTable delta_place(const GraphoidPoint& point, const FunctionFamily& E,
                       const std::vector<DeltaRelationRequest>& requested = {});

// ---- number fields ------------------------------------------------------

// Real algebraic number: primitive irreducible integer minimal polynomial
// plus a rational isolating interval holding exactly one real root.
struct AlgebraicNumber {
  UPoly min_poly;
  Rat iso_lo, iso_hi;

  BInt enclosure() const { return BInt(iso_lo, iso_hi); }
  void refine(const Rat& width);
};

// Element sum c_i alpha^i of Q(alpha), deg = deg(min_poly) coordinates.
struct NumberFieldElement {
  std::vector<Rat> coords;
};

// chi_P(x): rational approximation of the canonical place value within the
// requested precision, via exact bisection of the isolating interval.
Rat canonical_place(AlgebraicNumber alpha, const NumberFieldElement& x,
                    const Rat& precision);

// Explicit rational bounds a < x < b witnessing the Archimedean property.
std::pair<Rat, Rat> archimedean_bounds(AlgebraicNumber alpha,
                                       const NumberFieldElement& x);

// Irreducibility over Q for degrees <= 4: a mod-p witness when one exists
// below 100, otherwise the exhaustive rational-root + quadratic-factor
// search. Reducible inputs come back with an explicit factor.
struct IrreducibilityResult {
  bool irreducible;
  std::string certificate;
  std::optional<UPoly> factor;
};
IrreducibilityResult irreducible_over_Q(const UPoly& poly);

// All real places of Q(alpha) for alpha with the given minimal polynomial:
// one per real root (number fields are totally Archimedean, so orders,
// places and real roots are in bijection). Rejects reducible input.
std::vector<AlgebraicNumber> enumerate_places(const UPoly& min_poly,
                                              const Rat& width = Rat(1, 10000000000L));

// Minimal polynomial of alpha + c*beta through the resultant
// Res_y(m_alpha(y), m_{c beta}(x - y)). The minimal factor is certified
// exactly (mod-p witness, the degree <= 4 search, or the subset-product
// reconstruction over isolated real roots with verified exact division);
// when nothing can be certified the full resultant is returned unresolved.
struct MinPolyResult {
  UPoly poly;
  bool resolved;
  std::string certificate;
};
MinPolyResult min_poly_of_combination(const AlgebraicNumber& alpha,
                                      const AlgebraicNumber& beta, long c);
inline MinPolyResult min_poly_of_sum(const AlgebraicNumber& alpha,
                                     const AlgebraicNumber& beta) {
  return min_poly_of_combination(alpha, beta, 1);
}

// Pairwise subfield comparison for the real roots of an irreducible
// polynomial: deg minpoly(alpha + c beta) > deg f for some small c
// certifies Q(alpha) != Q(beta) while both stay abstractly isomorphic.
struct SubfieldPairReport {
  size_t root_i = 0, root_j = 0;
  bool opposite = false;
  bool distinct_certified = false;
  long certified_with_c = 0;
  int sum_degree = 0;  // degree of min_poly_of_sum for the pair
  std::string note;
};

struct SubfieldReport {
  UPoly poly;
  std::string irreducibility;
  std::vector<AlgebraicNumber> roots;
  std::vector<SubfieldPairReport> pairs;
  bool any_distinct = false;
  std::string conclusion;
  std::string text;
};
SubfieldReport subfields_distinct(const UPoly& poly);

} // namespace graphoid
