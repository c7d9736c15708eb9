#include "graphoid/ratfunc.hpp"

#include <algorithm>

namespace graphoid {

RatFunc normalize(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("zero denominator polynomial");
  RatFunc f;
  if (p.is_zero()) {
    f.num_ = Poly();
    f.den_ = Poly::constant(Rat(1));
    return f;
  }
  Poly g = poly_gcd(p, q);
  Poly np = poly_divexact(p, g);
  Poly nq = poly_divexact(q, g);
  // unit normalization: clear denominators, content 1, positive leading
  // coefficient in the denominator
  Int den_lcm(1);
  auto fold_dens = [&den_lcm](const Poly& a) {
    for (const auto& t : a.terms()) {
      Int d = t.second.get_den();
      Int g2;
      mpz_gcd(g2.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
      den_lcm = den_lcm / g2 * d;
    }
  };
  fold_dens(np);
  fold_dens(nq);
  Int num_gcd(0);
  auto fold_nums = [&](const Poly& a) {
    for (const auto& t : a.terms()) {
      Rat s = t.second * Rat(den_lcm);
      s.canonicalize();
      Int n = s.get_num();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
  };
  fold_nums(np);
  fold_nums(nq);
  if (num_gcd == 0) num_gcd = 1;
  Rat factor = Rat(den_lcm) / Rat(num_gcd);
  factor.canonicalize();
  np = np.scaled(factor);
  nq = nq.scaled(factor);
  if (nq.terms().back().second < 0) {
    np = -np;
    nq = -nq;
  }
  f.num_ = std::move(np);
  f.den_ = std::move(nq);
  return f;
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of nonconstant function");
  Rat v = num_.constant_value() / den_.constant_value();
  v.canonicalize();
  return v;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return normalize(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return normalize(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.num_.is_zero()) throw std::invalid_argument("division by the zero function");
  return normalize(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return normalize(-num_, den_); }

RatFunc RatFunc::pow(unsigned k) const {
  return normalize(num_.pow(k), den_.pow(k));
}

std::string RatFunc::to_string() const {
  if (den_ == Poly::constant(Rat(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string ExcludedLocus::describe() const {
  return "{" + p.to_string() + " = 0, " + q.to_string() + " = 0}";
}

ExcludedLocus domain_excluded(const RatFunc& f) {
  return ExcludedLocus{f.num(), f.den()};
}

std::optional<XReal> eval_exact(const RatFunc& f, const Rat& x, const Rat& y) {
  Rat pv = f.num().eval(x, y);
  Rat qv = f.den().eval(x, y);
  if (qv != 0) {
    Rat v = pv / qv;
    v.canonicalize();
    return xfin(v);
  }
  if (pv != 0) return xinf();
  return std::nullopt;
}

namespace {

// Chart transform of a fraction: flip the marked coordinates x -> 1/u,
// y -> 1/v and clear denominators so both parts are polynomials again.
void chart_transform(Poly& p, Poly& q, bool flip_x, bool flip_y) {
  if (flip_x) {
    int dp = std::max(p.degree_x(), 0);
    int dq = std::max(q.degree_x(), 0);
    p = p.chart_flip_x();
    q = q.chart_flip_x();
    // p/x^dp over q/x^dq: rebalance with the power difference
    if (dq > dp)
      p = p * Poly::monomial(Rat(1), static_cast<unsigned>(dq - dp), 0);
    else if (dp > dq)
      q = q * Poly::monomial(Rat(1), static_cast<unsigned>(dp - dq), 0);
  }
  if (flip_y) {
    int dp = std::max(p.degree_y(), 0);
    int dq = std::max(q.degree_y(), 0);
    p = p.chart_flip_y();
    q = q.chart_flip_y();
    if (dq > dp)
      p = p * Poly::monomial(Rat(1), 0, static_cast<unsigned>(dq - dp));
    else if (dp > dq)
      q = q * Poly::monomial(Rat(1), 0, static_cast<unsigned>(dp - dq));
  }
}

} // namespace

XInterval eval_interval(const RatFunc& f, const Box& region) {
  std::vector<ChartPiece> xs = arc_chart_pieces(region.coords[0]);
  std::vector<ChartPiece> ys;
  if (region.arity() >= 2) {
    ys = arc_chart_pieces(region.coords[1]);
  } else {
    ys.push_back(ChartPiece{false, BInt::point(Rat(0))});
  }

  std::vector<XInterval> parts;
  for (const ChartPiece& px : xs) {
    for (const ChartPiece& py : ys) {
      Poly p = f.num(), q = f.den();
      chart_transform(p, q, px.inverted, py.inverted);
      BInt P = p.eval(px.range, py.range);
      BInt Q = q.eval(px.range, py.range);
      parts.push_back(arc_div(P, Q));
    }
  }
  if (parts.empty()) return XInterval::full_circle();
  XInterval acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) {
    acc = arc_hull2(acc, parts[i]);
    if (acc.is_full()) break;
  }
  return acc;
}

FunctionFamily::FunctionFamily(std::vector<FamilyMember> members)
    : members_(std::move(members)) {
  for (size_t i = 0; i < members_.size(); ++i) {
    for (size_t j = i + 1; j < members_.size(); ++j) {
      if (members_[i].id == members_[j].id)
        throw std::invalid_argument("duplicate family member id: " + members_[i].id);
      if (members_[i].f == members_[j].f)
        throw std::invalid_argument("family members must be distinct: " +
                                    members_[i].id + ", " + members_[j].id);
    }
  }
}

const RatFunc& FunctionFamily::at(const std::string& id) const {
  for (const auto& m : members_)
    if (m.id == id) return m.f;
  throw std::out_of_range("no family member with id " + id);
}

bool FunctionFamily::has(const std::string& id) const {
  for (const auto& m : members_)
    if (m.id == id) return true;
  return false;
}

int FunctionFamily::arity() const {
  for (const auto& m : members_)
    if (m.f.depends_on_y()) return 2;
  return 1;
}

} // namespace graphoid
