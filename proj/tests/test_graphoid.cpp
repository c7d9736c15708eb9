#include <doctest.h>

#include "graphoid/membership.hpp"

#include <random>

using namespace graphoid;

namespace {

std::vector<Rat> radii_to(int k) {
  std::vector<Rat> r;
  Rat x(1, 10);
  for (int i = 0; i < k; ++i) {
    r.push_back(x);
    x /= 10;
  }
  return r;
}

GraphoidPoint gp(std::vector<XReal> base,
                 std::vector<std::pair<std::string, XReal>> values) {
  GraphoidPoint p;
  p.base = std::move(base);
  p.values = std::move(values);
  return p;
}

bool outer_contains(const ClusterSet& cs, const XReal& v) {
  for (const XInterval& a : cs.outer)
    if (a.contains(v)) return true;
  return false;
}

bool inner_contains(const ClusterSet& cs, const XReal& v) {
  for (const XInterval& a : cs.inner)
    if (a.contains(v)) return true;
  return false;
}

} // namespace

TEST_CASE("membership: a continuity point of the graph is confirmed") {
  FunctionFamily fam({{"f", parse_ratfunc("x/y")}});
  auto v = member(gp({xfin(1), xfin(1)}, {{"f", xfin(1)}}), fam,
                  {Rat(1), rat(1, 1000), rat(1, 1000000)});
  REQUIRE(v.kind == MembershipVerdict::Kind::ConfirmedToRadius);
  CHECK(v.confirmed_radius == rat(1, 1000000));
  CHECK(v.witnesses.size() == 3);
}

TEST_CASE("membership: wrong value at a continuity point is excluded") {
  FunctionFamily fam({{"f", parse_ratfunc("x/y")}});
  auto v = member(gp({xfin(1), xfin(1)}, {{"f", xfin(2)}}), fam, radii_to(6));
  REQUIRE(v.kind == MembershipVerdict::Kind::Excluded);
  REQUIRE(!v.excluded_member.empty());
  REQUIRE(v.exclusion_box.has_value());

  // oracle: a dense grid in the exclusion box finds no witness
  const Box& box = *v.exclusion_box;
  Rat rho2 = v.excluded_radius * v.excluded_radius;
  RatFunc f = fam.at("f");
  REQUIRE(box.coords[0].lo().is_finite());
  Rat x0 = box.coords[0].lo().value(), x1 = box.coords[0].hi().value();
  Rat y0 = box.coords[1].lo().value(), y1 = box.coords[1].hi().value();
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      Rat gx = x0 + (x1 - x0) * Rat(i, 100);
      Rat gy = y0 + (y1 - y0) * Rat(j, 100);
      gx.canonicalize();
      gy.canonicalize();
      auto val = eval_exact(f, gx, gy);
      if (!val) continue;
      CHECK(chordal_sq(*val, xfin(2)) >= rho2);
    }
  }
}

TEST_CASE("membership at the singular point of x/y accepts every slope value") {
  FunctionFamily fam({{"f", parse_ratfunc("x/y")}});
  // oracle for -7/3: points (-7t, 3t) evaluate exactly to -7/3
  RatFunc f = fam.at("f");
  CHECK(*eval_exact(f, rat(-7, 1000), rat(3, 1000)) == xfin(rat(-7, 3)));

  for (const XReal& c : {xfin(0), xfin(1), xfin(rat(-7, 3)), xinf()}) {
    auto v = member(gp({xfin(0), xfin(0)}, {{"f", c}}), fam, radii_to(6));
    REQUIRE(v.kind == MembershipVerdict::Kind::ConfirmedToRadius);
    CHECK(v.confirmed_radius == rat(1, 1000000));
  }
}

TEST_CASE("membership validates arity and coverage") {
  FunctionFamily fam({{"f", parse_ratfunc("x/y")}});
  CHECK_THROWS_AS(member(gp({xfin(0)}, {{"f", xfin(0)}}), fam, radii_to(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(member(gp({xfin(0), xfin(0)}, {{"g", xfin(0)}}), fam, radii_to(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(member(gp({xfin(0), xfin(0)}, {{"f", xfin(0)}}), fam, {}),
                  std::invalid_argument);
}

TEST_CASE("one-variable extension: poles, infinity, identity") {
  // 1/x at 0: both one-sided limits are the single point inf
  CHECK(one_var_extension(parse_ratfunc("1/x"), xfin(0)).is_infinite());
  // (3x^2+1)/(x^2+2) at inf: substitute u = 1/x and evaluate at 0 (oracle)
  RatFunc g = parse_ratfunc("(3*x^2+1)/(x^2+2)");
  RatFunc subst = parse_ratfunc("(3+x^2)/(1+2*x^2)");  // u-chart by hand
  CHECK(*eval_exact(subst, Rat(0)) == xfin(3));
  CHECK(one_var_extension(g, xinf()) == xfin(3));
  CHECK(one_var_extension(parse_ratfunc("x"), xfin(5)) == xfin(5));
  CHECK(one_var_extension(parse_ratfunc("x"), xinf()).is_infinite());
  CHECK(one_var_extension(parse_ratfunc("1/x"), xinf()) == xfin(0));
}

TEST_CASE("cluster set of x/y at the origin is the full circle") {
  // oracle: along y = tx the value is 1/t, covering R minus 0; along
  // y = x^2 the value diverges; along x = y^2 it vanishes
  ClusterSet cs = cluster_set(parse_ratfunc("x/y"), {xfin(0), xfin(0)});
  REQUIRE(cs.outer.size() == 1);
  CHECK(cs.outer[0].is_full());
  REQUIRE(cs.inner.size() == 1);
  CHECK(cs.inner[0].is_full());
}

TEST_CASE("cluster set of x^2/(x^2+y^2) at the origin is [0,1]") {
  ClusterSet cs = cluster_set(parse_ratfunc("x^2/(x^2+y^2)"), {xfin(0), xfin(0)});
  CHECK(inner_contains(cs, xfin(0)));
  CHECK(inner_contains(cs, xfin(1)));
  CHECK(inner_contains(cs, xfin(rat(1, 2))));
  CHECK(outer_contains(cs, xfin(1)));
  CHECK(!outer_contains(cs, xfin(rat(11, 10))));
  CHECK(!outer_contains(cs, xfin(rat(-1, 10))));
  CHECK(!outer_contains(cs, xinf()));
}

TEST_CASE("removable singularities collapse to the continuous value") {
  ClusterSet cs = cluster_set(parse_ratfunc("(x^2-1)/(x-1)"), {xfin(1)});
  REQUIRE(cs.inner.size() == 1);
  CHECK(cs.inner[0].is_singleton());
  CHECK(cs.inner[0].lo() == xfin(2));
  CHECK(outer_contains(cs, xfin(2)));
  CHECK(arc_diameter_sq(cs.outer[0]) < rat(1, 1000000));
}

TEST_CASE("one-variable cluster sets shrink onto the extension value") {
  for (const char* expr : {"1/x", "(x^2-3)/(x-1)", "x^3"}) {
    RatFunc f = parse_ratfunc(expr);
    for (const XReal& at : {xfin(0), xfin(1), xfin(rat(5, 2)), xinf()}) {
      ClusterSet cs = cluster_set(f, {at});
      XReal expect = one_var_extension(f, at);
      CHECK(inner_contains(cs, expect));
      CHECK(outer_contains(cs, expect));
      REQUIRE(cs.outer.size() == 1);
      CHECK(arc_diameter_sq(cs.outer[0]) < rat(1, 1000000));
      CHECK(chordal_sq(arc_midpoint(cs.outer[0]), expect) < rat(1, 1000000));
    }
  }
}

TEST_CASE("membership coherence: inner cluster values are never excluded") {
  RatFunc f = parse_ratfunc("x*y/(x^2+y^2)");
  ClusterSet cs = cluster_set(f, {xfin(0), xfin(0)});
  FunctionFamily fam({{"f", f}});
  // sample a few certified inner values
  std::vector<XReal> samples{xfin(0), xfin(rat(1, 2)), xfin(rat(-1, 2)),
                             xfin(rat(1, 4))};
  for (const XReal& b : samples) {
    REQUIRE(inner_contains(cs, b));
    auto v = member(gp({xfin(0), xfin(0)}, {{"f", b}}), fam, radii_to(3));
    CHECK(v.kind != MembershipVerdict::Kind::Excluded);
  }
}

TEST_CASE("cluster set at a base point with an infinite coordinate") {
  // f = x/y at (inf, 1): along x -> inf with y -> 1 the values diverge
  ClusterSet cs = cluster_set(parse_ratfunc("x/y"), {xinf(), xfin(1)});
  CHECK(outer_contains(cs, xinf()));
  CHECK(inner_contains(cs, xinf()));
  CHECK(!outer_contains(cs, xfin(0)));
}

TEST_CASE("fiber sampling: spread at the singular point, focus at a smooth one") {
  FunctionFamily fam({{"f", parse_ratfunc("x/y")}});

  FiberCloud spread = fiber_sample(fam, {xfin(0), xfin(0)}, 64, rat(1, 1000), 17);
  CHECK(spread.samples.size() == 64);
  // values reach far apart on the circle (an eps-net is reported)
  CHECK(spread.eps_net_sq > 0);
  bool small = false, big = false, infinite = false;
  for (const FiberSample& s : spread.samples) {
    const XReal& v = s.values[0];
    if (v.is_infinite()) infinite = true;
    else if (rat_abs(v.value()) <= 1) small = true;
    else big = true;
  }
  CHECK(small);
  CHECK(big);
  CHECK(infinite);

  // continuity point: all values within 1e-3 of 1 for radius 1e-4
  FiberCloud focus = fiber_sample(fam, {xfin(1), xfin(1)}, 32, rat(1, 10000), 17);
  Rat tol = rat(1, 1000) * rat(1, 1000);
  for (const FiberSample& s : focus.samples)
    CHECK(chordal_sq(s.values[0], xfin(1)) < tol);

  // identity in one variable: values stay within the sampling radius
  FunctionFamily id_fam({{"id", parse_ratfunc("x")}});
  FiberCloud idc = fiber_sample(id_fam, {xfin(3)}, 16, rat(1, 100), 17);
  for (const FiberSample& s : idc.samples)
    CHECK(chordal_sq(s.values[0], xfin(3)) < rat(1, 100) * rat(1, 100));
}

TEST_CASE("fiber samples stay inside the outer cluster set") {
  RatFunc f = parse_ratfunc("x^2/(x^2+y^2)");
  FunctionFamily fam({{"f", f}});
  ClusterSet cs = cluster_set(f, {xfin(0), xfin(0)});
  FiberCloud cloud = fiber_sample(fam, {xfin(0), xfin(0)}, 48, rat(1, 1000), 23);
  for (const FiberSample& s : cloud.samples) {
    bool inside = false;
    for (const XInterval& a : cs.outer)
      if (a.contains(s.values[0])) inside = true;
    CHECK(inside);
  }
}

TEST_CASE("fiber witnesses carry exact member values") {
  FunctionFamily fam({{"f", parse_ratfunc("x/y")}, {"g", parse_ratfunc("x+y")}});
  FiberCloud cloud = fiber_sample(fam, {xfin(0), xfin(0)}, 20, rat(1, 100), 3);
  for (const FiberSample& s : cloud.samples) {
    auto fv = eval_exact(fam.at("f"), s.witness[0], s.witness[1]);
    auto gv = eval_exact(fam.at("g"), s.witness[0], s.witness[1]);
    REQUIRE(fv);
    REQUIRE(gv);
    CHECK(*fv == s.values[0]);
    CHECK(*gv == s.values[1]);
  }
}
