#include <doctest.h>

#include "graphoid/roots.hpp"

using namespace graphoid;

namespace {

UPoly up(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.push_back(Rat(v));
  return UPoly(std::move(c));
}

} // namespace

TEST_CASE("sturm counting on the line and on half-open intervals") {
  // x^4 - 5x^2 + 2 has four real roots
  UPoly quartic = up({2, 0, -5, 0, 1});
  CHECK(sturm_count_all(quartic) == 4);

  CHECK(sturm_count_all(up({1, 0, 1})) == 0);  // x^2 + 1

  // x^3 - x: roots -1, 0, 1 (factoring oracle); (0, 2] keeps only x = 1
  UPoly cubic = up({0, -1, 0, 1});
  CHECK(sturm_count(cubic, Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(cubic, Rat(-2), Rat(2)) == 3);
  CHECK(sturm_count(cubic, Rat(-1), Rat(1)) == 2);  // -1 excluded, 0 and 1 in
  CHECK(sturm_count(cubic, Rat(-2), Rat(-1)) == 1); // right endpoint included
}

TEST_CASE("multiple roots are counted once") {
  UPoly sq = up({1, 2, 1});  // (x+1)^2
  CHECK(sturm_count_all(sq) == 1);
  CHECK(sturm_count(sq, Rat(-2), Rat(0)) == 1);
}

TEST_CASE("isolation produces disjoint intervals with non-root endpoints") {
  UPoly quartic = up({2, 0, -5, 0, 1});
  auto iso = isolate_real_roots(quartic);
  REQUIRE(iso.size() == 4);
  for (size_t i = 0; i < iso.size(); ++i) {
    CHECK(iso[i].first < iso[i].second);
    CHECK(quartic.eval(iso[i].first) != 0);
    CHECK(quartic.eval(iso[i].second) != 0);
    CHECK(sturm_count(quartic, iso[i].first, iso[i].second) == 1);
    if (i > 0) CHECK(iso[i - 1].second <= iso[i].first);
  }
}

TEST_CASE("rational roots land in exact fenced intervals") {
  UPoly cubic = up({0, -1, 0, 1});  // roots -1, 0, 1
  auto iso = isolate_real_roots(cubic);
  REQUIRE(iso.size() == 3);
  CHECK(iso[0].first < -1);
  CHECK(iso[2].second > 1);
}

TEST_CASE("refinement keeps the root and shrinks the interval") {
  UPoly p = up({-2, 0, 1});  // x^2 - 2
  auto iso = isolate_real_roots(p);
  REQUIRE(iso.size() == 2);
  auto r = refine_root(p, iso[1], rat(1, 100000000));
  CHECK(r.second - r.first <= rat(1, 100000000));
  // sqrt(2) = 1.41421356... is inside
  CHECK(r.first < rat(141421357, 100000000));
  CHECK(r.second > rat(141421356, 100000000));
}

TEST_CASE("sign evaluation at an algebraic root") {
  UPoly p = up({-2, 0, 1});
  auto iso = isolate_real_roots(p);
  // g = x - 1 is positive at sqrt(2), negative at -sqrt(2)
  UPoly g = up({-1, 1});
  CHECK(sign_at_root(p, iso[1], g) == 1);
  CHECK(sign_at_root(p, iso[0], g) == -1);
  // and exactly zero for g sharing the root
  CHECK(sign_at_root(p, iso[1], p) == 0);
}

TEST_CASE("certified value arcs: plain intermediate-value sweep") {
  // f = t^2 on [0, 2] sampled at 0, 1, 2: arcs must cover [0, 4]
  UPoly u = up({0, 0, 1}), v = up({1});
  auto arcs = certified_value_arcs(u, v, UPoly(), Rat(0), Rat(2), {Rat(1)});
  bool covers = false;
  for (const XInterval& a : arcs)
    if (a.contains(xfin(0)) && a.contains(xfin(4)) && a.contains(xfin(2)))
      covers = true;
  CHECK(covers);
}

TEST_CASE("certified value arcs: poles emit signed divergence arcs") {
  // f = 1/t on [-1, 1]: the closed value set is {|v| >= 1} u {inf}
  UPoly u = up({1}), v = up({0, 1});
  auto arcs = certified_value_arcs(u, v, UPoly(), Rat(-1), Rat(1),
                                   {rat(-1, 2), rat(1, 2)});
  auto contains = [&](const XReal& x) {
    for (const XInterval& a : arcs)
      if (a.contains(x)) return true;
    return false;
  };
  CHECK(contains(xfin(1)));
  CHECK(contains(xfin(-1)));
  CHECK(contains(xfin(5)));
  CHECK(contains(xfin(-5)));
  CHECK(contains(xinf()));
  // soundness: 1/t never takes values in (-1, 1) off the endpoints
  CHECK(!contains(xfin(0)));
  CHECK(!contains(xfin(rat(1, 2))));
}

TEST_CASE("certified value arcs respect the guard") {
  // guard vanishing at 0 must suppress claims across that sample
  UPoly u = up({0, 1}), v = up({1});
  UPoly guard = up({0, 1});
  auto arcs = certified_value_arcs(u, v, guard, Rat(-1), Rat(1), {Rat(0)});
  for (const XInterval& a : arcs) {
    CHECK(!a.contains(xfin(rat(1, 2))));  // no sweep across the guard root
  }
}

TEST_CASE("root bound really bounds") {
  UPoly q = up({2, 0, -5, 0, 1});
  Rat B = root_bound(q);
  auto iso = isolate_real_roots(q);
  for (const auto& r : iso) {
    CHECK(r.first > -B);
    CHECK(r.second < B);
  }
}
