#include "graphoid/xreal.hpp"

#include <stdexcept>

namespace graphoid {

const Rat& XReal::value() const {
  if (!finite_) throw std::logic_error("XReal::value() on inf");
  return value_;
}

std::string XReal::to_string() const {
  return finite_ ? rat_to_string(value_) : std::string("inf");
}

XReal XReal::from_string(const std::string& text) {
  if (text == "inf") return infinity();
  return XReal(rat_from_string(text));
}

const XReal& XSet::point() const {
  if (all_) throw std::logic_error("XSet::point() on All");
  return point_;
}

XSet xadd(const XReal& r, const XReal& s) {
  if (r.is_infinite() && s.is_infinite()) return XSet::all();
  if (r.is_infinite() || s.is_infinite()) return XSet::singleton(xinf());
  return XSet::singleton(xfin(r.value() + s.value()));
}

XSet xmul(const XReal& r, const XReal& s) {
  if (r.is_infinite()) {
    if (s.is_finite() && s.value() == 0) return XSet::all();
    return XSet::singleton(xinf());
  }
  if (s.is_infinite()) {
    if (r.value() == 0) return XSet::all();
    return XSet::singleton(xinf());
  }
  return XSet::singleton(xfin(r.value() * s.value()));
}

Rat chordal_sq(const XReal& u, const XReal& v) {
  if (u.is_infinite() && v.is_infinite()) return Rat(0);
  if (u.is_infinite() || v.is_infinite()) {
    const Rat& t = u.is_infinite() ? v.value() : u.value();
    Rat d = Rat(4) / (1 + t * t);
    d.canonicalize();
    return d;
  }
  const Rat& a = u.value();
  const Rat& b = v.value();
  Rat diff = a - b;
  Rat d = 4 * diff * diff / ((1 + a * a) * (1 + b * b));
  d.canonicalize();
  return d;
}

XReal antipode(const XReal& v) {
  if (v.is_infinite()) return xfin(0);
  if (v.value() == 0) return xinf();
  Rat r = Rat(-1) / v.value();
  r.canonicalize();
  return xfin(r);
}

} // namespace graphoid
