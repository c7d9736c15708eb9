#include "graphoid/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace graphoid {

Poly Poly::from_terms(std::vector<std::pair<Mono, Rat>> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return mono_less(a.first, b.first); });
  std::vector<std::pair<Mono, Rat>> merged;
  for (auto& t : ts) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
      if (merged.back().second == 0) merged.pop_back();
    } else if (t.second != 0) {
      merged.push_back(std::move(t));
    }
  }
  Poly p;
  p.terms_ = std::move(merged);
  return p;
}

Poly Poly::constant(Rat c) { return monomial(std::move(c), 0, 0); }

Poly Poly::monomial(Rat c, unsigned ex, unsigned ey) {
  Poly p;
  if (c != 0) p.terms_.push_back({Mono{ex, ey}, std::move(c)});
  return p;
}

Poly Poly::from_upoly_x(const UPoly& p) {
  std::vector<std::pair<Mono, Rat>> ts;
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    if (p[i] != 0) ts.push_back({Mono{static_cast<unsigned>(i), 0}, p[i]});
  return from_terms(std::move(ts));
}

Poly Poly::from_upoly_y(const UPoly& p) {
  std::vector<std::pair<Mono, Rat>> ts;
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    if (p[i] != 0) ts.push_back({Mono{0, static_cast<unsigned>(i)}, p[i]});
  return from_terms(std::move(ts));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.total() == 0);
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("constant_value of nonconstant polynomial");
  return terms_[0].second;
}

int Poly::degree_x() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.ex));
  return d;
}

int Poly::degree_y() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.ey));
  return d;
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().first.total());
}

int Poly::min_total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.total());
}

Poly Poly::operator+(const Poly& o) const {
  auto ts = terms_;
  ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(std::move(ts));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  std::vector<std::pair<Mono, Rat>> ts;
  ts.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      ts.push_back({Mono{a.first.ex + b.first.ex, a.first.ey + b.first.ey},
                    a.second * b.second});
  return from_terms(std::move(ts));
}

Poly Poly::scaled(const Rat& c) const {
  if (c == 0) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) {
    t.second *= c;
    t.second.canonicalize();
  }
  return p;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(Rat(1));
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    base = base * base;
    k >>= 1u;
  }
  return result;
}

Rat Poly::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& t : terms_)
    acc += t.second * rat_pow(x, t.first.ex) * rat_pow(y, t.first.ey);
  acc.canonicalize();
  return acc;
}

BInt Poly::eval(const BInt& x, const BInt& y) const {
  if (terms_.empty()) return BInt::point(Rat(0));
  unsigned dx = static_cast<unsigned>(std::max(degree_x(), 0));
  unsigned dy = static_cast<unsigned>(std::max(degree_y(), 0));
  std::vector<BInt> px(dx + 1, BInt::point(Rat(1)));
  std::vector<BInt> py(dy + 1, BInt::point(Rat(1)));
  for (unsigned i = 1; i <= dx; ++i) px[i] = x.pow(i);
  for (unsigned i = 1; i <= dy; ++i) py[i] = y.pow(i);
  BInt acc = BInt::point(Rat(0));
  for (const auto& t : terms_)
    acc = acc + (px[t.first.ex] * py[t.first.ey]).scaled(t.second);
  return acc;
}

Poly Poly::derivative_x() const {
  std::vector<std::pair<Mono, Rat>> ts;
  for (const auto& t : terms_)
    if (t.first.ex > 0)
      ts.push_back({Mono{t.first.ex - 1, t.first.ey},
                    t.second * static_cast<long>(t.first.ex)});
  return from_terms(std::move(ts));
}

Poly Poly::derivative_y() const {
  std::vector<std::pair<Mono, Rat>> ts;
  for (const auto& t : terms_)
    if (t.first.ey > 0)
      ts.push_back({Mono{t.first.ex, t.first.ey - 1},
                    t.second * static_cast<long>(t.first.ey)});
  return from_terms(std::move(ts));
}

namespace {

std::vector<std::vector<Rat>> binomials(unsigned n) {
  std::vector<std::vector<Rat>> b(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    b[i].assign(i + 1, Rat(1));
    for (unsigned j = 1; j < i; ++j) b[i][j] = b[i - 1][j - 1] + b[i - 1][j];
  }
  return b;
}

} // namespace

Poly Poly::shift(const Rat& a, const Rat& b) const {
  if (terms_.empty()) return Poly();
  unsigned dx = static_cast<unsigned>(std::max(degree_x(), 0));
  unsigned dy = static_cast<unsigned>(std::max(degree_y(), 0));
  auto bx = binomials(dx);
  auto by = binomials(dy);
  std::vector<std::pair<Mono, Rat>> ts;
  for (const auto& t : terms_) {
    // (x+a)^ex (y+b)^ey expanded
    for (unsigned i = 0; i <= t.first.ex; ++i) {
      Rat cx = bx[t.first.ex][i] * rat_pow(a, t.first.ex - i);
      if (cx == 0) continue;
      for (unsigned j = 0; j <= t.first.ey; ++j) {
        Rat cy = by[t.first.ey][j] * rat_pow(b, t.first.ey - j);
        if (cy == 0) continue;
        ts.push_back({Mono{i, j}, t.second * cx * cy});
      }
    }
  }
  return from_terms(std::move(ts));
}

Poly Poly::chart_flip_x() const {
  if (terms_.empty()) return Poly();
  unsigned dx = static_cast<unsigned>(degree_x());
  std::vector<std::pair<Mono, Rat>> ts;
  for (const auto& t : terms_)
    ts.push_back({Mono{dx - t.first.ex, t.first.ey}, t.second});
  return from_terms(std::move(ts));
}

Poly Poly::chart_flip_y() const {
  if (terms_.empty()) return Poly();
  unsigned dy = static_cast<unsigned>(degree_y());
  std::vector<std::pair<Mono, Rat>> ts;
  for (const auto& t : terms_)
    ts.push_back({Mono{t.first.ex, dy - t.first.ey}, t.second});
  return from_terms(std::move(ts));
}

UPoly Poly::substitute_y(const UPoly& g_of_x) const {
  UPoly acc;
  for (const auto& t : terms_) {
    UPoly term = UPoly::monomial(t.second, t.first.ex);
    UPoly gp = UPoly::constant(Rat(1));
    for (unsigned i = 0; i < t.first.ey; ++i) gp = gp * g_of_x;
    acc = acc + term * gp;
  }
  return acc;
}

UPoly Poly::substitute_x(const UPoly& g_of_y) const {
  UPoly acc;
  for (const auto& t : terms_) {
    UPoly term = UPoly::monomial(t.second, t.first.ey);
    UPoly gp = UPoly::constant(Rat(1));
    for (unsigned i = 0; i < t.first.ex; ++i) gp = gp * g_of_y;
    acc = acc + term * gp;
  }
  return acc;
}

UPoly Poly::to_upoly_x() const {
  if (degree_y() > 0) throw std::logic_error("to_upoly_x: polynomial depends on y");
  std::vector<Rat> c(static_cast<size_t>(std::max(degree_x(), -1) + 1), Rat(0));
  for (const auto& t : terms_) c[t.first.ex] = t.second;
  return UPoly(std::move(c));
}

UPoly Poly::to_upoly_y() const {
  if (degree_x() > 0) throw std::logic_error("to_upoly_y: polynomial depends on x");
  std::vector<Rat> c(static_cast<size_t>(std::max(degree_y(), -1) + 1), Rat(0));
  for (const auto& t : terms_) c[t.first.ey] = t.second;
  return UPoly(std::move(c));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  for (size_t k = terms_.size(); k-- > 0;) {
    const auto& [m, c] = terms_[k];
    bool first = k + 1 == terms_.size();
    Rat a = c;
    if (!first) {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      out << "-";
      a = -a;
    }
    bool has_var = m.total() > 0;
    if (!has_var || a != 1) {
      out << rat_to_string(a);
      if (has_var) out << "*";
    }
    if (m.ex > 0) {
      out << "x";
      if (m.ex > 1) out << "^" << m.ex;
      if (m.ey > 0) out << "*";
    }
    if (m.ey > 0) {
      out << "y";
      if (m.ey > 1) out << "^" << m.ey;
    }
  }
  return out.str();
}

int Poly::compare(const Poly& a, const Poly& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[i];
    if (!(ta.first == tb.first)) return mono_less(ta.first, tb.first) ? -1 : 1;
    if (ta.second != tb.second) return ta.second < tb.second ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

Poly blowup_chart(const Poly& p, int chart) {
  if (p.is_zero()) return Poly();
  unsigned d0 = static_cast<unsigned>(p.min_total_degree());
  std::vector<std::pair<Mono, Rat>> ts;
  for (const auto& t : p.terms()) {
    unsigned radial = t.first.total() - d0;
    unsigned param = chart == 1 ? t.first.ey : t.first.ex;
    ts.push_back({Mono{radial, param}, t.second});
  }
  Poly result;
  // route through from_terms for canonical order
  for (auto& t : ts) result = result + Poly::monomial(t.second, t.first.ex, t.first.ey);
  return result;
}

// ---- gcd and resultants via the Q[x][y] view --------------------------

namespace {

// coefficient vector in y with UPoly-in-x entries; no trailing zeros
using YView = std::vector<UPoly>;

YView to_yview(const Poly& p) {
  YView v(static_cast<size_t>(std::max(p.degree_y(), -1) + 1));
  for (const auto& t : p.terms()) {
    std::vector<Rat> c(t.first.ex + 1, Rat(0));
    c[t.first.ex] = t.second;
    v[t.first.ey] = v[t.first.ey] + UPoly(std::move(c));
  }
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

Poly from_yview(const YView& v) {
  Poly p;
  for (size_t j = 0; j < v.size(); ++j)
    for (size_t i = 0; i < v[j].coeffs().size(); ++i)
      if (v[j][i] != 0)
        p = p + Poly::monomial(v[j][i], static_cast<unsigned>(i),
                               static_cast<unsigned>(j));
  return p;
}

bool yview_zero(const YView& v) { return v.empty(); }

UPoly yview_content(const YView& v) {
  UPoly g;
  for (const UPoly& c : v) g = upoly_gcd(g, c);
  return g;
}

YView yview_divexact_scalar(const YView& v, const UPoly& d) {
  YView r;
  r.reserve(v.size());
  for (const UPoly& c : v) r.push_back(c.is_zero() ? UPoly() : upoly_divexact(c, d));
  return r;
}

YView yview_scale(const YView& v, const UPoly& s) {
  YView r;
  r.reserve(v.size());
  for (const UPoly& c : v) r.push_back(c * s);
  return r;
}

// pseudo-remainder of a by b in y (b nonzero)
YView yview_prem(YView a, const YView& b) {
  int db = static_cast<int>(b.size()) - 1;
  const UPoly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    UPoly la = a.back();
    // a = a * lb - la * y^(da-db) * b
    for (UPoly& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) {
      size_t idx = static_cast<size_t>(da - db + j);
      a[idx] = a[idx] - la * b[static_cast<size_t>(j)];
    }
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

Poly normalize_unit(const Poly& p) {
  if (p.is_zero()) return p;
  // primitive integer content, positive leading term in grlex order
  Int den_lcm(1), num_gcd(0);
  for (const auto& t : p.terms()) {
    Int d = t.second.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  for (const auto& t : p.terms()) {
    Rat s = t.second * Rat(den_lcm);
    s.canonicalize();
    Int n = s.get_num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) num_gcd = 1;
  Rat factor = Rat(den_lcm) / Rat(num_gcd);
  factor.canonicalize();
  Poly q = p.scaled(factor);
  if (q.terms().back().second < 0) q = -q;
  return q;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(Rat(1));
  // both univariate in the same variable: lift the fast path
  if (a.degree_y() == 0 && b.degree_y() == 0) {
    UPoly g = upoly_gcd(a.to_upoly_x(), b.to_upoly_x());
    return normalize_unit(Poly::from_upoly_x(g));
  }
  if (a.degree_x() == 0 && b.degree_x() == 0) {
    UPoly g = upoly_gcd(a.to_upoly_y(), b.to_upoly_y());
    return normalize_unit(Poly::from_upoly_y(g));
  }

  YView A = to_yview(a), B = to_yview(b);
  UPoly ca = yview_content(A), cb = yview_content(B);
  UPoly cg = upoly_gcd(ca, cb);
  A = yview_divexact_scalar(A, ca);
  B = yview_divexact_scalar(B, cb);
  if (A.size() < B.size()) std::swap(A, B);
  while (!yview_zero(B)) {
    YView r = yview_prem(A, B);
    A = std::move(B);
    if (!yview_zero(r)) {
      UPoly cr = yview_content(r);
      r = yview_divexact_scalar(r, cr);
    }
    B = std::move(r);
  }
  // A is the primitive gcd in y; restore the content gcd
  Poly g = from_yview(A);
  Poly result = g * Poly::from_upoly_x(cg);
  return normalize_unit(result);
}

Poly poly_divexact(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::invalid_argument("poly_divexact by zero");
  if (p.is_zero()) return Poly();
  if (d.is_constant()) return p.scaled(Rat(1) / d.constant_value());
  if (d.degree_y() == 0 && p.degree_y() == 0) {
    return Poly::from_upoly_x(upoly_divexact(p.to_upoly_x(), d.to_upoly_x()));
  }
  if (d.degree_x() == 0 && p.degree_x() == 0) {
    return Poly::from_upoly_y(upoly_divexact(p.to_upoly_y(), d.to_upoly_y()));
  }
  if (d.degree_y() == 0) {
    // divisor lives in Q[x]: divide each y-coefficient
    YView P = to_yview(p);
    UPoly dd = d.to_upoly_x();
    YView Q;
    Q.reserve(P.size());
    for (const UPoly& c : P) Q.push_back(c.is_zero() ? UPoly() : upoly_divexact(c, dd));
    return from_yview(Q);
  }
  YView P = to_yview(p), D = to_yview(d);
  int dd = static_cast<int>(D.size()) - 1;
  YView Q(P.size() >= D.size() ? P.size() - D.size() + 1 : 0);
  while (static_cast<int>(P.size()) - 1 >= dd && !P.empty()) {
    int dp = static_cast<int>(P.size()) - 1;
    UPoly qc = upoly_divexact(P.back(), D.back());
    Q[static_cast<size_t>(dp - dd)] = qc;
    for (int j = 0; j <= dd; ++j) {
      size_t idx = static_cast<size_t>(dp - dd + j);
      P[idx] = P[idx] - qc * D[static_cast<size_t>(j)];
    }
    while (!P.empty() && P.back().is_zero()) P.pop_back();
  }
  if (!yview_zero(P)) throw std::logic_error("inexact bivariate division");
  return from_yview(Q);
}

UPoly resultant_y(const Poly& a, const Poly& b) {
  YView A = to_yview(a), B = to_yview(b);
  int da = static_cast<int>(A.size()) - 1;
  int db = static_cast<int>(B.size()) - 1;
  if (da < 0 || db < 0) return UPoly();
  if (da == 0 && db == 0) return UPoly::constant(Rat(1));
  if (da == 0) {
    // res(c, b) = c^db
    UPoly r = UPoly::constant(Rat(1));
    for (int i = 0; i < db; ++i) r = r * A[0];
    return r;
  }
  if (db == 0) {
    UPoly r = UPoly::constant(Rat(1));
    for (int i = 0; i < da; ++i) r = r * B[0];
    return r;
  }
  int n = da + db;
  std::vector<std::vector<UPoly>> m(static_cast<size_t>(n),
                                    std::vector<UPoly>(static_cast<size_t>(n)));
  for (int r = 0; r < db; ++r)
    for (int j = 0; j <= da; ++j) m[r][r + (da - j)] = A[static_cast<size_t>(j)];
  for (int r = 0; r < da; ++r)
    for (int j = 0; j <= db; ++j) m[db + r][r + (db - j)] = B[static_cast<size_t>(j)];

  // Bareiss fraction-free elimination over Q[x]
  UPoly prev = UPoly::constant(Rat(1));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return UPoly();  // singular: resultant vanishes
      std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        UPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.is_zero() ? UPoly() : upoly_divexact(num, prev);
      }
      m[i][k] = UPoly();
    }
    prev = m[k][k];
  }
  UPoly det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return sign < 0 ? -det : det;
}

} // namespace graphoid
