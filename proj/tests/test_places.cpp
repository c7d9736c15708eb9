#include <doctest.h>

#include "graphoid/places.hpp"

#include <random>

using namespace graphoid;

namespace {

UPoly up(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.push_back(Rat(v));
  return UPoly(std::move(c));
}

AlgebraicNumber sqrt2() {
  return AlgebraicNumber{up({-2, 0, 1}), Rat(1), Rat(2)};
}

AlgebraicNumber sqrt3() {
  return AlgebraicNumber{up({-3, 0, 1}), Rat(1), Rat(2)};
}

// rational enclosure of sqrt(r) to 1e-8, used as a radical oracle
BInt sqrt_enclosure(const Rat& r) {
  return BInt(rat_sqrt_below(r), rat_sqrt_above(r));
}

} // namespace

TEST_CASE("place table checker: the inf-times-zero escape hatch") {
  // {0->0, 1->1, x->inf, 1/x->0, x*(1/x) = 1}: no violations since
  // inf (.) 0 is unconstrained
  PlaceTable t;
  t.set_entry("0", xfin(0));
  t.set_entry("1", xfin(1));
  t.set_entry("x", xinf());
  t.set_entry("(1)/(x)", xfin(0));
  t.products.push_back({"x", "(1)/(x)", "1"});
  CHECK(check_place_table(t).empty());
}

TEST_CASE("place table checker: finite arithmetic violations are caught") {
  PlaceTable t;
  t.set_entry("0", xfin(0));
  t.set_entry("1", xfin(1));
  t.set_entry("x", xfin(2));
  t.set_entry("2*x", xfin(5));
  t.sums.push_back({"x", "x", "2*x"});
  auto violations = check_place_table(t);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].description.find("5") != std::string::npos);
}

TEST_CASE("place table checker: missing anchors are violations") {
  PlaceTable t;
  t.set_entry("1", xfin(1));
  auto v = check_place_table(t);
  CHECK(!v.empty());
  PlaceTable t2;
  t2.set_entry("0", xfin(0));
  t2.set_entry("1", xfin(2));
  CHECK(!check_place_table(t2).empty());
}

TEST_CASE("delta place at a continuity point records the closure relations") {
  FunctionFamily fam({{"f", parse_ratfunc("x/y")},
                      {"gx", parse_ratfunc("x")},
                      {"gy", parse_ratfunc("y")},
                      {"h", parse_ratfunc("(x^2)/(y)")}});  // x * (x/y)
  GraphoidPoint pt;
  pt.base = {xfin(1), xfin(1)};
  pt.values = {{"f", xfin(1)}, {"gx", xfin(1)}, {"gy", xfin(1)}, {"h", xfin(1)}};
  PlaceTable t = delta_place(pt, fam);
  CHECK(t.has_entry("x"));
  CHECK(t.entry("x") == xfin(1));
  CHECK(t.entry("y") == xfin(1));
  bool found_product = false;
  for (const auto& r : t.products)
    if (r.h == "(x^2)/(y)") found_product = true;
  CHECK(found_product);
  CHECK(check_place_table(t).empty());
}

TEST_CASE("delta place tolerates the unconstrained singular value") {
  FunctionFamily fam({{"f", parse_ratfunc("x/y")},
                      {"gx", parse_ratfunc("x")},
                      {"gy", parse_ratfunc("y")}});
  GraphoidPoint pt;
  pt.base = {xfin(0), xfin(0)};
  pt.values = {{"f", xfin(7)}, {"gx", xfin(0)}, {"gy", xfin(0)}};
  PlaceTable t = delta_place(pt, fam);
  // y * (x/y) = x is recorded and holds: 0 (.) 7 = {0} contains 0
  CHECK(check_place_table(t).empty());
}

TEST_CASE("delta place: constants map to themselves") {
  FunctionFamily fam({{"two", parse_ratfunc("2")},
                      {"three", parse_ratfunc("3")},
                      {"five", parse_ratfunc("5")}});
  GraphoidPoint pt;
  pt.base = {xfin(4)};
  pt.values = {{"two", xfin(2)}, {"three", xfin(3)}, {"five", xfin(5)}};
  PlaceTable t = delta_place(pt, fam);
  CHECK(t.entry("2") == xfin(2));
  CHECK(t.entry("5") == xfin(5));
  bool sum_found = false;
  for (const auto& r : t.sums)
    if ((r.f == "2" && r.g == "3" && r.h == "5")) sum_found = true;
  CHECK(sum_found);
  CHECK(check_place_table(t).empty());
}

TEST_CASE("delta place reports missing requested compounds") {
  FunctionFamily fam({{"f", parse_ratfunc("x")}});
  GraphoidPoint pt;
  pt.base = {xfin(1)};
  pt.values = {{"f", xfin(1)}};
  CHECK_THROWS_AS(
      delta_place(pt, fam, {DeltaRelationRequest{"x", "x", "x^2", true}}),
      std::invalid_argument);
}

TEST_CASE("canonical place: sqrt(2) by bisection against the radical oracle") {
  Rat v = canonical_place(sqrt2(), NumberFieldElement{{Rat(0), Rat(1)}},
                          rat(1, 1000));
  BInt oracle = sqrt_enclosure(Rat(2));
  CHECK(v >= oracle.lo - rat(1, 1000));
  CHECK(v <= oracle.hi + rat(1, 1000));
}

TEST_CASE("canonical place: rational elements are exact") {
  Rat v = canonical_place(sqrt2(), NumberFieldElement{{rat(7, 3), Rat(0)}},
                          rat(1, 1000000));
  CHECK(v == rat(7, 3));
}

TEST_CASE("canonical place: alpha^2 for the quartic hits (5+sqrt(17))/2") {
  UPoly quartic = up({2, 0, -5, 0, 1});
  auto places = enumerate_places(quartic);
  REQUIRE(places.size() == 4);
  // largest root is in [2, 3]
  AlgebraicNumber alpha = places[3];
  CHECK(alpha.iso_lo > 2);
  CHECK(alpha.iso_hi < 3);
  Rat v = canonical_place(
      alpha, NumberFieldElement{{Rat(0), Rat(0), Rat(1), Rat(0)}}, rat(1, 100000));
  // oracle: exact radical evaluation of (5 + sqrt(17))/2
  BInt s17 = sqrt_enclosure(Rat(17));
  Rat lo = (5 + s17.lo) / 2, hi = (5 + s17.hi) / 2;
  CHECK(v > lo - rat(1, 10000));
  CHECK(v < hi + rat(1, 10000));
  // 4.5616 to four decimals
  CHECK(rat_abs(v - rat(45616, 10000)) < rat(1, 1000));
}

TEST_CASE("canonical place is monotone up to twice the precision") {
  UPoly quartic = up({2, 0, -5, 0, 1});
  auto places = enumerate_places(quartic);
  AlgebraicNumber alpha = places[3];
  std::mt19937_64 rng(31);
  Rat prec(1, 100000);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rat> c1, c2;
    for (int i = 0; i < 4; ++i) {
      c1.push_back(Rat(static_cast<long>(rng() % 9) - 4));
      c2.push_back(Rat(static_cast<long>(rng() % 9) - 4));
    }
    Rat v1 = canonical_place(alpha, NumberFieldElement{c1}, prec);
    Rat v2 = canonical_place(alpha, NumberFieldElement{c2}, prec);
    // decide the true order by refining the difference enclosure
    std::vector<Rat> diff;
    for (int i = 0; i < 4; ++i) diff.push_back(c2[i] - c1[i]);
    AlgebraicNumber a = alpha;
    a.refine(rat(1, 10000000000L));
    BInt d = BInt::point(Rat(0));
    for (int i = 0; i < 4; ++i)
      d = d + a.enclosure().pow(static_cast<unsigned>(i)).scaled(diff[i]);
    if (d.lo > 0) CHECK(v2 - v1 > -2 * prec);
    if (d.hi < 0) CHECK(v1 - v2 > -2 * prec);
  }
}

TEST_CASE("archimedean bounds witness rational sandwiching") {
  auto [lo, hi] = archimedean_bounds(sqrt2(), NumberFieldElement{{Rat(0), Rat(1)}});
  CHECK(lo >= 1);
  CHECK(hi <= 2);
  CHECK(lo < hi);

  auto [zl, zh] = archimedean_bounds(sqrt2(), NumberFieldElement{{Rat(0), Rat(0)}});
  CHECK(zl == -1);
  CHECK(zh == 1);

  // alpha^3 for the quartic root near 2.1358: bounds around 9.74
  UPoly quartic = up({2, 0, -5, 0, 1});
  auto places = enumerate_places(quartic);
  auto [cl, ch] = archimedean_bounds(
      places[3], NumberFieldElement{{Rat(0), Rat(0), Rat(0), Rat(1)}});
  CHECK(cl > rat(96, 10));
  CHECK(ch < rat(99, 10));
}

TEST_CASE("enumerate places: counts match the root structure") {
  CHECK(enumerate_places(up({2, 0, -5, 0, 1})).size() == 4);
  CHECK(enumerate_places(up({1, 0, 1})).empty());    // x^2 + 1
  CHECK(enumerate_places(up({-2, 0, 1})).size() == 2);  // x^2 - 2
  CHECK_THROWS_AS(enumerate_places(up({-1, 0, 1})), std::invalid_argument);
}

TEST_CASE("places-orders-roots bijection for random irreducible quartics") {
  std::mt19937_64 rng(11);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 100; ++trial) {
    std::vector<Rat> c;
    for (int i = 0; i < 4; ++i) c.push_back(Rat(static_cast<long>(rng() % 11) - 5));
    c.push_back(Rat(1 + static_cast<long>(rng() % 3)));
    UPoly p(std::move(c));
    if (p.degree() < 2) continue;
    IrreducibilityResult ir = irreducible_over_Q(p);
    if (!ir.irreducible) continue;
    ++tested;
    CHECK(static_cast<int>(enumerate_places(p).size()) == sturm_count_all(p));
  }
  CHECK(tested == 100);
}

TEST_CASE("irreducibility: the paper quartic, a difference of squares, x^4+4") {
  CHECK(irreducible_over_Q(up({2, 0, -5, 0, 1})).irreducible);

  IrreducibilityResult r1 = irreducible_over_Q(up({-1, 0, 1}));
  REQUIRE(!r1.irreducible);
  REQUIRE(r1.factor.has_value());
  CHECK(upoly_divmod(up({-1, 0, 1}), *r1.factor).rem.is_zero());

  // oracle: (x^2+2x+2)(x^2-2x+2) multiplies back to x^4 + 4
  UPoly a = up({2, 2, 1}), b = up({2, -2, 1});
  CHECK(a * b == up({4, 0, 0, 0, 1}));
  IrreducibilityResult r2 = irreducible_over_Q(up({4, 0, 0, 0, 1}));
  REQUIRE(!r2.irreducible);
  REQUIRE(r2.factor.has_value());
  CHECK(upoly_divmod(up({4, 0, 0, 0, 1}), *r2.factor).rem.is_zero());
  CHECK(r2.factor->degree() == 2);

  CHECK_THROWS_AS(irreducible_over_Q(up({1, 0, 0, 0, 0, 1})),
                  std::invalid_argument);  // degree 5 out of scope
}

TEST_CASE("minimal polynomial of sqrt(2)+sqrt(3): the resultant rederives it") {
  MinPolyResult m = min_poly_of_sum(sqrt2(), sqrt3());
  REQUIRE(m.resolved);
  // oracle re-derivation: prod (x -+ a -+ b) = x^4 - 2(a^2+b^2) x^2 + (a^2-b^2)^2
  CHECK(m.poly == up({1, 0, -10, 0, 1}));
}

TEST_CASE("minimal polynomial of alpha + (-alpha) is x") {
  AlgebraicNumber neg{up({-2, 0, 1}), Rat(-2), Rat(-1)};
  MinPolyResult m = min_poly_of_sum(sqrt2(), neg);
  REQUIRE(m.resolved);
  CHECK(m.poly == up({0, 1}));
}

TEST_CASE("combination minimal polynomials vanish on the enclosure and divide the degree bound") {
  AlgebraicNumber a = sqrt2(), b = sqrt3();
  a.refine(rat(1, 1000000));
  b.refine(rat(1, 1000000));
  for (long c : {1L, 2L}) {
    MinPolyResult m = min_poly_of_combination(a, b, c);
    REQUIRE(m.resolved);
    BInt s = a.enclosure() + b.enclosure().scaled(Rat(c));
    BInt val = m.poly.eval(s);
    CHECK(val.lo <= 0);
    CHECK(val.hi >= 0);
    CHECK(4 % m.poly.degree() == 0);
  }
}

TEST_CASE("the paper quartic: sums of non-opposite roots have honest degree 4") {
  UPoly quartic = up({2, 0, -5, 0, 1});
  auto roots = enumerate_places(quartic);
  REQUIRE(roots.size() == 4);
  // alpha ~ 2.1358, beta ~ 0.6621
  MinPolyResult sum = min_poly_of_sum(roots[3], roots[2]);
  REQUIRE(sum.resolved);
  CHECK(sum.poly == up({17, 0, -10, 0, 1}));
  CHECK(sum.poly.degree() == 4);
  // alpha + 2 beta generates the degree-8 field: the distinctness witness
  MinPolyResult comb = min_poly_of_combination(roots[3], roots[2], 2);
  REQUIRE(comb.resolved);
  CHECK(comb.poly.degree() == 8);
}

TEST_CASE("subfield reports: distinct, equal-Galois, conjugate-quadratic") {
  SubfieldReport distinct = subfields_distinct(up({2, 0, -5, 0, 1}));
  CHECK(distinct.any_distinct);
  CHECK(distinct.conclusion.find("isomorphic, but not equal") != std::string::npos);
  size_t certified = 0;
  for (const auto& p : distinct.pairs)
    if (p.distinct_certified) ++certified;
  CHECK(certified == 4);  // the four non-opposite pairs

  SubfieldReport equal = subfields_distinct(up({1, 0, -10, 0, 1}));
  CHECK(!equal.any_distinct);
  CHECK(equal.conclusion.find("equal subfields") != std::string::npos);
  for (const auto& p : equal.pairs) {
    if (!p.opposite) CHECK(p.sum_degree <= 4);
  }

  SubfieldReport quad = subfields_distinct(up({-2, 0, 1}));
  CHECK(!quad.any_distinct);
  REQUIRE(quad.pairs.size() == 1);
  CHECK(quad.pairs[0].opposite);
  CHECK(quad.conclusion.find("equal subfields") != std::string::npos);
}
