#include "graphoid/upoly.hpp"

#include <stdexcept>

namespace graphoid {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(Rat c) {
  UPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

UPoly UPoly::monomial(Rat c, unsigned deg) {
  UPoly p;
  if (c != 0) {
    p.c_.assign(deg + 1, Rat(0));
    p.c_[deg] = std::move(c);
  }
  return p;
}

const Rat& UPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (Rat& x : r) x = -x;
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rat& c) const {
  if (c == 0) return UPoly();
  std::vector<Rat> r(c_);
  for (Rat& x : r) x *= c;
  return UPoly(std::move(r));
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  acc.canonicalize();
  return acc;
}

BInt UPoly::eval(const BInt& x) const {
  if (c_.empty()) return BInt::point(Rat(0));
  // termwise with tight powers (avoids the even-power dependency loss)
  BInt acc = BInt::point(c_[0]);
  for (size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    acc = acc + x.pow(static_cast<unsigned>(i)).scaled(c_[i]);
  }
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::shift(const Rat& a) const {
  // Horner form of p(x + a)
  UPoly acc;
  UPoly xa({a, Rat(1)});
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * xa + UPoly::constant(c_[i]);
  }
  return acc;
}

UPoly UPoly::scale_arg(const Rat& c) const {
  std::vector<Rat> r(c_);
  Rat f(1);
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] *= f;
    f *= c;
  }
  return UPoly(std::move(r));
}

UPoly UPoly::reverse() const {
  std::vector<Rat> r(c_.rbegin(), c_.rend());
  return UPoly(std::move(r));
}

UPoly UPoly::compose(const UPoly& q) const {
  UPoly acc;
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * q + UPoly::constant(c_[i]);
  }
  return acc;
}

UPolyDivMod upoly_divmod(const UPoly& p, const UPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Rat> rem(p.coeffs());
  int dq = q.degree();
  int dr = static_cast<int>(rem.size()) - 1;
  if (dr < dq) return {UPoly(), p};
  std::vector<Rat> quot(dr - dq + 1, Rat(0));
  const Rat& lead = q.leading();
  for (int k = dr; k >= dq; --k) {
    if (rem[k] == 0) continue;
    Rat f = rem[k] / lead;
    f.canonicalize();
    quot[k - dq] = f;
    for (int j = 0; j <= dq; ++j) {
      rem[k - dq + j] -= f * q[j];
    }
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly upoly_divexact(const UPoly& p, const UPoly& q) {
  auto dm = upoly_divmod(p, q);
  if (!dm.rem.is_zero()) throw std::logic_error("inexact polynomial division");
  return std::move(dm.quot);
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = upoly_divmod(x, y).rem;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(Rat(1) / x.leading());
}

UPoly upoly_squarefree(const UPoly& p) {
  if (p.degree() <= 0) return p;
  UPoly g = upoly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return upoly_divexact(p, g);
}

UPoly upoly_primitive_integer(const UPoly& p) {
  if (p.is_zero()) return p;
  Int den_lcm(1);
  for (const Rat& c : p.coeffs()) {
    Int d = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  Int num_gcd(0);
  std::vector<Rat> scaled;
  scaled.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) {
    Rat s = c * Rat(den_lcm);
    s.canonicalize();
    scaled.push_back(s);
    Int n = s.get_num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) num_gcd = 1;
  if (scaled.back() < 0) num_gcd = -num_gcd;
  for (Rat& c : scaled) {
    c /= Rat(num_gcd);
    c.canonicalize();
  }
  return UPoly(std::move(scaled));
}

} // namespace graphoid
