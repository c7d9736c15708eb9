#include "graphoid/rat.hpp"

#include <stdexcept>

namespace graphoid {

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s = text;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // exact decimal: a.b -> (a*10^k + b) / 10^k
    std::string intpart = s.substr(0, dot);
    std::string fracpart = s.substr(dot + 1);
    if (fracpart.empty() || fracpart.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad decimal literal: " + text);
    bool neg = false;
    if (!intpart.empty() && (intpart[0] == '-' || intpart[0] == '+')) {
      neg = intpart[0] == '-';
      intpart = intpart.substr(1);
    }
    if (intpart.empty()) intpart = "0";
    if (intpart.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad decimal literal: " + text);
    Int num(intpart);
    Int den(1);
    for (char c : fracpart) {
      num *= 10;
      num += c - '0';
      den *= 10;
    }
    Rat r(num, den);
    r.canonicalize();
    if (neg) r = -r;
    return r;
  }
  try {
    Rat r(s);
    r.canonicalize();
    if (r.get_den() <= 0) throw std::invalid_argument("nonpositive denominator");
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& base, unsigned exp) {
  Rat result(1);
  Rat b = base;
  unsigned e = exp;
  while (e) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

const Rat& rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

namespace {

// floor(sqrt(num/den) * 2^bits) as an integer, exact.
Int scaled_isqrt_floor(const Rat& r, unsigned bits) {
  Int num = r.get_num();
  Int den = r.get_den();
  Int scaled = (num << (2 * bits)) / den;  // floor
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return root;
}

} // namespace

Rat rat_sqrt_below(const Rat& r, unsigned precision_bits) {
  if (r < 0) throw std::domain_error("rat_sqrt_below of negative");
  if (r == 0) return Rat(0);
  Int root = scaled_isqrt_floor(r, precision_bits);
  Rat lo(root, Int(1) << precision_bits);
  lo.canonicalize();
  return lo;
}

Rat rat_sqrt_above(const Rat& r, unsigned precision_bits) {
  if (r < 0) throw std::domain_error("rat_sqrt_above of negative");
  if (r == 0) return Rat(0);
  Int root = scaled_isqrt_floor(r, precision_bits) + 1;
  Rat hi(root, Int(1) << precision_bits);
  hi.canonicalize();
  return hi;
}

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

} // namespace graphoid
