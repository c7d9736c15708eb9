#include <doctest.h>

#include "graphoid/ratfunc.hpp"

#include <random>

using namespace graphoid;

namespace {

std::mt19937_64 g_rng(99);

Poly random_poly(int max_deg, int terms, bool use_y) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    long c = static_cast<long>(g_rng() % 9) - 4;
    unsigned ex = static_cast<unsigned>(g_rng() % (max_deg + 1));
    unsigned ey = use_y ? static_cast<unsigned>(g_rng() % (max_deg + 1)) : 0;
    p = p + Poly::monomial(Rat(c), ex, ey);
  }
  return p;
}

} // namespace

TEST_CASE("parser: literals, variables and precedence") {
  RatFunc f = parse_ratfunc("x/y");
  CHECK(f.num() == Poly::variable_x());
  CHECK(f.den() == Poly::variable_y());

  // gcd cancellation is forced by the irreducible-fraction invariant
  RatFunc g = parse_ratfunc("(x^2-1)/(x-1)");
  CHECK(g.num() == Poly::variable_x() + Poly::constant(Rat(1)));
  CHECK(g.den() == Poly::constant(Rat(1)));

  RatFunc h = parse_ratfunc("x^4-5*x^2+2");
  CHECK(h.num().to_string() == "x^4 - 5*x^2 + 2");
  CHECK(h.den() == Poly::constant(Rat(1)));

  CHECK(parse_ratfunc("2+3*4").constant_value() == 14);
  CHECK(parse_ratfunc("(2+3)*4").constant_value() == 20);
  CHECK_THROWS_AS(parse_ratfunc("x^2^3"), ParseError);
}

TEST_CASE("parser: decimals are exact and unary minus binds below power") {
  CHECK(parse_ratfunc("0.125").constant_value() == rat(1, 8));
  CHECK(parse_ratfunc("-x^2") == -parse_ratfunc("x^2"));
  CHECK(parse_ratfunc("3/4").constant_value() == rat(3, 4));
}

TEST_CASE("parser: errors carry positions") {
  CHECK_THROWS_AS(parse_ratfunc("x +"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("(x"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("x^y"), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("1/(x-x)"), ParseError);
  try {
    parse_ratfunc("x + @");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("print-parse round trip on random functions") {
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_poly(3, 4, true);
    Poly q = random_poly(2, 3, true);
    if (q.is_zero()) continue;
    RatFunc f = normalize(p, q);
    CHECK(parse_ratfunc(f.to_string()) == f);
  }
}

TEST_CASE("normalize: examples and idempotence") {
  Poly x = Poly::variable_x(), y = Poly::variable_y();
  RatFunc a = normalize(x.scaled(Rat(2)), y.scaled(Rat(4)));
  CHECK(a.to_string() == "(x)/(2*y)");
  RatFunc b = normalize(x * x - Poly::constant(Rat(1)), x - Poly::constant(Rat(1)));
  CHECK(b.to_string() == "x + 1");
  RatFunc c = normalize(x * y, x * x);
  CHECK(c.to_string() == "(y)/(x)");
  CHECK_THROWS_AS(normalize(x, Poly()), std::invalid_argument);
}

TEST_CASE("normalize kills common factors: representation equality") {
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_poly(2, 3, true);
    Poly q = random_poly(2, 3, true);
    Poly r = random_poly(1, 2, true);
    if (q.is_zero() || r.is_zero()) continue;
    CHECK(normalize(p * r, q * r) == normalize(p, q));
  }
}

TEST_CASE("domain exclusion is the common zero system") {
  ExcludedLocus d1 = domain_excluded(parse_ratfunc("x/y"));
  // oracle: common zeros of x and y by inspection
  CHECK(d1.p == Poly::variable_x());
  CHECK(d1.q == Poly::variable_y());
  CHECK(d1.p.eval(Rat(0), Rat(0)) == 0);
  CHECK(d1.q.eval(Rat(0), Rat(0)) == 0);

  ExcludedLocus d2 = domain_excluded(parse_ratfunc("1/x"));
  CHECK(d2.p.is_constant());  // the numerator never vanishes: empty locus
  CHECK(d2.p.constant_value() == 1);

  ExcludedLocus d3 = domain_excluded(parse_ratfunc("(x-1)/(y-2)"));
  CHECK(d3.p.eval(Rat(1), Rat(2)) == 0);
  CHECK(d3.q.eval(Rat(1), Rat(2)) == 0);
  CHECK(d3.q.eval(Rat(1), Rat(3)) != 0);
}

TEST_CASE("exact evaluation: value, pole, undefined") {
  RatFunc f = parse_ratfunc("x/y");
  CHECK(*eval_exact(f, Rat(1), Rat(2)) == xfin(rat(1, 2)));
  CHECK(eval_exact(f, Rat(1), Rat(0))->is_infinite());
  CHECK(!eval_exact(f, Rat(0), Rat(0)).has_value());
}

TEST_CASE("interval evaluation encloses the true range") {
  // monotone square on [1,2]
  XInterval sq = eval_interval(parse_ratfunc("x^2"),
                               Box({XInterval(xfin(1), xfin(2))}));
  CHECK(sq.contains(xfin(1)));
  CHECK(sq.contains(xfin(4)));
  CHECK(sq.contains(xfin(rat(5, 2))));
  CHECK(!sq.contains(xinf()));

  // x/y on [1,2]^2: oracle by monotonicity, range [1/2, 2]
  XInterval q = eval_interval(parse_ratfunc("x/y"),
                              Box({XInterval(xfin(1), xfin(2)),
                                   XInterval(xfin(1), xfin(2))}));
  CHECK(q.contains(xfin(rat(1, 2))));
  CHECK(q.contains(xfin(2)));
  CHECK(!q.contains(xinf()));

  // x/y on [-1,1]^2 attains every value (cluster oracle): full circle
  XInterval full = eval_interval(parse_ratfunc("x/y"),
                                 Box({XInterval(xfin(-1), xfin(1)),
                                      XInterval(xfin(-1), xfin(1))}));
  CHECK(full.is_full());
}

TEST_CASE("interval evaluation handles regions through infinity by charts") {
  // 1/x over {|x| >= 2} u {inf}: values in [-1/2, 1/2]
  XInterval v = eval_interval(parse_ratfunc("1/x"),
                              Box({XInterval(xfin(2), xfin(-2))}));
  CHECK(v.contains(xfin(0)));
  CHECK(v.contains(xfin(rat(1, 2))));
  CHECK(!v.contains(xfin(1)));

  // (3x^2+1)/(x^2+2) near infinity stays near 3
  XInterval w = eval_interval(parse_ratfunc("(3*x^2+1)/(x^2+2)"),
                              Box({XInterval(xfin(100), xfin(-100))}));
  CHECK(w.contains(xfin(3)));
  CHECK(!w.contains(xfin(0)));
}

TEST_CASE("exact values lie inside degenerate-box enclosures") {
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_poly(3, 4, true);
    Poly q = random_poly(2, 3, true);
    if (q.is_zero()) continue;
    RatFunc f = normalize(p, q);
    Rat x(static_cast<long>(g_rng() % 17) - 8, 1 + static_cast<long>(g_rng() % 5));
    Rat y(static_cast<long>(g_rng() % 17) - 8, 1 + static_cast<long>(g_rng() % 5));
    x.canonicalize();
    y.canonicalize();
    auto v = eval_exact(f, x, y);
    if (!v) continue;
    Box pt({XInterval::singleton(xfin(x)), XInterval::singleton(xfin(y))});
    CHECK(eval_interval(f, pt).contains(*v));
  }
}

TEST_CASE("one-variable reduced fractions are never undefined at rationals") {
  // gcd(p, q) = 1 in one variable leaves no common roots at all
  for (int trial = 0; trial < 80; ++trial) {
    Poly p = random_poly(4, 4, false);
    Poly q = random_poly(4, 4, false);
    if (q.is_zero()) continue;
    RatFunc f = normalize(p, q);
    Rat a(static_cast<long>(g_rng() % 41) - 20, 1 + static_cast<long>(g_rng() % 7));
    a.canonicalize();
    CHECK(eval_exact(f, a).has_value());
  }
}

TEST_CASE("family invariants: distinct members, unique ids, arity") {
  std::vector<FamilyMember> ms{{"f", parse_ratfunc("x/y")},
                               {"g", parse_ratfunc("x+y")}};
  FunctionFamily fam(ms);
  CHECK(fam.arity() == 2);
  CHECK(fam.at("f") == parse_ratfunc("x/y"));
  CHECK_THROWS(FunctionFamily({{"a", parse_ratfunc("x")}, {"a", parse_ratfunc("y")}}));
  CHECK_THROWS(FunctionFamily(
      {{"a", parse_ratfunc("x")}, {"b", parse_ratfunc("(x*y)/(y)")}}));
  FunctionFamily one({{"id", parse_ratfunc("x^2")}});
  CHECK(one.arity() == 1);
}
