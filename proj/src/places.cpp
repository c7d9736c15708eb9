#include "graphoid/places.hpp"

#include <stdexcept>

namespace graphoid {

bool PlaceTable::has_entry(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return true;
  return false;
}

const XReal& PlaceTable::entry(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  throw std::out_of_range("place table has no entry " + key);
}

void PlaceTable::set_entry(const std::string& key, const XReal& v) {
  for (auto& [k, old] : entries) {
    if (k == key) {
      if (!(old == v))
        throw std::invalid_argument("conflicting values for table entry " + key);
      return;
    }
  }
  entries.push_back({key, v});
}

std::vector<PlaceViolation> check_place_table(const PlaceTable& t) {
  std::vector<PlaceViolation> out;
  auto need = [&](const std::string& key, const XReal& expect) {
    if (!t.has_entry(key)) {
      out.push_back({"missing required entry " + key});
      return;
    }
    if (!(t.entry(key) == expect))
      out.push_back({"entry " + key + " maps to " + t.entry(key).to_string() +
                     ", required " + expect.to_string()});
  };
  need("0", xfin(0));
  need("1", xfin(1));

  auto check_relations = [&](const std::vector<PlaceRelation>& rels, bool product) {
    for (const PlaceRelation& r : rels) {
      bool ok = true;
      for (const std::string& k : {r.f, r.g, r.h}) {
        if (!t.has_entry(k)) {
          out.push_back({"relation references missing entry " + k});
          ok = false;
        }
      }
      if (!ok) continue;
      XSet allowed = product ? xmul(t.entry(r.f), t.entry(r.g))
                             : xadd(t.entry(r.f), t.entry(r.g));
      if (!allowed.contains(t.entry(r.h))) {
        std::string op = product ? " (.) " : " (+) ";
        out.push_back({"relation " + r.f + op + r.g + " = " + r.h + ": value " +
                       t.entry(r.h).to_string() + " not in " +
                       (allowed.is_all() ? std::string("S")
                                         : "{" + allowed.point().to_string() + "}")});
      }
    }
  };
  check_relations(t.sums, false);
  check_relations(t.products, true);
  return out;
}

PlaceTable delta_place(const GraphoidPoint& point, const FunctionFamily& E,
                       const std::vector<DeltaRelationRequest>& requested) {
  size_t n = static_cast<size_t>(E.arity());
  if (point.base.size() != n)
    throw std::invalid_argument("graphoid point arity does not match the family");

  // keyed function list: members plus 0, 1 and the coordinates
  std::vector<std::pair<std::string, RatFunc>> keyed;
  auto add_keyed = [&](const RatFunc& f) {
    std::string key = f.to_string();
    for (const auto& [k, g] : keyed)
      if (k == key) return;
    keyed.push_back({key, f});
  };
  add_keyed(ratfunc_constant(Rat(0)));
  add_keyed(ratfunc_constant(Rat(1)));
  add_keyed(ratfunc_x());
  if (n >= 2) add_keyed(ratfunc_y());
  for (const auto& m : E.members()) add_keyed(m.f);

  PlaceTable t;
  t.set_entry("0", xfin(0));
  t.set_entry("1", xfin(1));
  t.set_entry(ratfunc_x().to_string(), point.base[0]);
  if (n >= 2) t.set_entry(ratfunc_y().to_string(), point.base[1]);
  for (const auto& m : E.members()) {
    const XReal& v = m.f.is_constant() ? xfin(m.f.constant_value())
                                       : point.value_of(m.id);
    t.set_entry(m.f.to_string(), v);
  }

  // recognize sums and products among the keyed functions (identities with
  // the constants 0 and 1 are skipped as vacuous)
  auto is_const = [](const RatFunc& f, long v) {
    return f.is_constant() && f.constant_value() == v;
  };
  for (size_t i = 0; i < keyed.size(); ++i) {
    for (size_t j = i; j < keyed.size(); ++j) {
      const RatFunc& fi = keyed[i].second;
      const RatFunc& fj = keyed[j].second;
      if (!is_const(fi, 0) && !is_const(fj, 0)) {
        std::string sum_key = (fi + fj).to_string();
        if (t.has_entry(sum_key))
          t.sums.push_back({keyed[i].first, keyed[j].first, sum_key});
      }
      if (!is_const(fi, 0) && !is_const(fj, 0) && !is_const(fi, 1) &&
          !is_const(fj, 1)) {
        std::string prod_key = (fi * fj).to_string();
        if (t.has_entry(prod_key))
          t.products.push_back({keyed[i].first, keyed[j].first, prod_key});
      }
    }
  }

  for (const DeltaRelationRequest& r : requested) {
    std::string missing;
    for (const std::string& k : {r.f, r.g, r.h})
      if (!t.has_entry(k)) missing += (missing.empty() ? "" : ", ") + k;
    if (!missing.empty())
      throw std::invalid_argument("requested relation has missing members: " + missing);
    if (r.is_product)
      t.products.push_back({r.f, r.g, r.h});
    else
      t.sums.push_back({r.f, r.g, r.h});
  }
  return t;
}

} // namespace graphoid
