#include "graphoid/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace graphoid {

json xreal_to_json(const XReal& v) { return v.to_string(); }

XReal xreal_from_json(const json& j) {
  if (j.is_number_integer()) return xfin(Rat(j.get<long>()));
  return XReal::from_string(j.get<std::string>());
}

json arc_to_json(const XInterval& a) {
  json j;
  j["full"] = a.is_full();
  if (!a.is_full()) {
    j["lo"] = xreal_to_json(a.lo());
    j["hi"] = xreal_to_json(a.hi());
  }
  return j;
}

XInterval arc_from_json(const json& j) {
  if (j.value("full", false)) return XInterval::full_circle();
  return XInterval(xreal_from_json(j.at("lo")), xreal_from_json(j.at("hi")));
}

json box_to_json(const Box& b) {
  json arr = json::array();
  for (const XInterval& a : b.coords) arr.push_back(arc_to_json(a));
  return arr;
}

Box box_from_json(const json& j) {
  std::vector<XInterval> coords;
  for (const json& a : j) coords.push_back(arc_from_json(a));
  return Box(std::move(coords));
}

json family_to_json(const FunctionFamily& fam) {
  json arr = json::array();
  for (const auto& m : fam.members())
    arr.push_back({{"id", m.id}, {"expr", m.f.to_string()}});
  return arr;
}

FunctionFamily family_from_json(const json& j) {
  const json& list = j.is_object() && j.contains("members") ? j.at("members") : j;
  std::vector<FamilyMember> members;
  for (const json& m : list)
    members.push_back(
        {m.at("id").get<std::string>(), parse_ratfunc(m.at("expr").get<std::string>())});
  return FunctionFamily(std::move(members));
}

json point_to_json(const GraphoidPoint& p) {
  json base = json::array();
  for (const XReal& b : p.base) base.push_back(xreal_to_json(b));
  json values = json::object();
  for (const auto& [id, v] : p.values) values[id] = xreal_to_json(v);
  return {{"base", base}, {"values", values}};
}

GraphoidPoint point_from_json(const json& j) {
  GraphoidPoint p;
  for (const json& b : j.at("base")) p.base.push_back(xreal_from_json(b));
  for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it)
    p.values.push_back({it.key(), xreal_from_json(it.value())});
  return p;
}

namespace {

std::string target_class_name(TargetClass k) {
  switch (k) {
    case TargetClass::Finite: return "E0";
    case TargetClass::PlusInfinity: return "E+";
    case TargetClass::MinusInfinity: return "E-";
  }
  return "?";
}

TargetClass target_class_from(const std::string& s) {
  if (s == "E0") return TargetClass::Finite;
  if (s == "E+") return TargetClass::PlusInfinity;
  if (s == "E-") return TargetClass::MinusInfinity;
  throw std::invalid_argument("unknown target class " + s);
}

Poly poly_from_expr(const std::string& text) {
  RatFunc f = parse_ratfunc(text);
  if (!(f.den() == Poly::constant(Rat(1))))
    throw std::invalid_argument("expected a polynomial, got a fraction: " + text);
  return f.num();
}

} // namespace

json system_to_json(const InequalitySystem& sys) {
  json constraints = json::array();
  for (const Constraint& c : sys.constraints)
    constraints.push_back({{"poly", c.poly.to_string()}, {"rel", rel_to_string(c.rel)}});
  json labels = json::array();
  for (const BranchLabel& l : sys.labels)
    labels.push_back({{"member", l.member_id},
                      {"class", target_class_name(l.klass)},
                      {"alpha", rat_to_string(l.alpha)},
                      {"beta", rat_to_string(l.beta)},
                      {"q_sign", l.q_sign}});
  return {{"constraints", constraints}, {"region", box_to_json(sys.region)},
          {"labels", labels}};
}

InequalitySystem system_from_json(const json& j) {
  InequalitySystem sys(box_from_json(j.at("region")));
  for (const json& c : j.at("constraints"))
    sys.constraints.push_back(Constraint{poly_from_expr(c.at("poly").get<std::string>()),
                                         rel_from_string(c.at("rel").get<std::string>())});
  if (j.contains("labels")) {
    for (const json& l : j.at("labels"))
      sys.labels.push_back(BranchLabel{l.at("member").get<std::string>(),
                                       target_class_from(l.at("class").get<std::string>()),
                                       rat_from_string(l.at("alpha").get<std::string>()),
                                       rat_from_string(l.at("beta").get<std::string>()),
                                       l.at("q_sign").get<int>()});
  }
  return sys;
}

json feas_verdict_to_json(const FeasibilityVerdict& v) {
  json j;
  switch (v.kind) {
    case FeasibilityVerdict::Kind::Witness: {
      j["verdict"] = "witness";
      json w = json::array();
      for (const Rat& x : v.witness) w.push_back(rat_to_string(x));
      j["point"] = w;
      break;
    }
    case FeasibilityVerdict::Kind::Infeasible: {
      j["verdict"] = "infeasible";
      j["cover_boxes"] = v.cover.size();
      json cover = json::array();
      for (const CoverBox& b : v.cover) {
        json ranges = json::array();
        for (size_t i = 0; i < b.ranges.size(); ++i)
          ranges.push_back({{"inverted", static_cast<bool>(b.inverted[i])},
                            {"lo", rat_to_string(b.ranges[i].lo)},
                            {"hi", rat_to_string(b.ranges[i].hi)}});
        cover.push_back(
            {{"ranges", ranges}, {"violated_constraint", b.violated_constraint}});
      }
      j["cover"] = cover;
      break;
    }
    case FeasibilityVerdict::Kind::Unknown:
      j["verdict"] = "unknown";
      break;
  }
  j["depth_reached"] = v.depth_reached;
  j["boxes_processed"] = v.boxes_processed;
  return j;
}

json membership_verdict_to_json(const MembershipVerdict& v) {
  json j;
  switch (v.kind) {
    case MembershipVerdict::Kind::ConfirmedToRadius: {
      j["verdict"] = "confirmed_to_radius";
      j["radius"] = rat_to_string(v.confirmed_radius);
      json ws = json::array();
      for (const auto& [rho, w] : v.witnesses) {
        json pt = json::array();
        for (const Rat& x : w) pt.push_back(rat_to_string(x));
        ws.push_back({{"radius", rat_to_string(rho)}, {"witness", pt}});
      }
      j["witnesses"] = ws;
      break;
    }
    case MembershipVerdict::Kind::Excluded: {
      j["verdict"] = "excluded";
      j["radius"] = rat_to_string(v.excluded_radius);
      if (!v.excluded_member.empty()) {
        j["member"] = v.excluded_member;
        j["box"] = box_to_json(*v.exclusion_box);
      } else {
        j["branch_cover_boxes"] = v.exclusion_cover.size();
      }
      break;
    }
    case MembershipVerdict::Kind::Unknown:
      j["verdict"] = "unknown";
      j["radii_processed"] = v.radii_processed;
      break;
  }
  return j;
}

json cluster_to_json(const ClusterSet& cs) {
  json inner = json::array(), outer = json::array();
  for (const XInterval& a : cs.inner) inner.push_back(arc_to_json(a));
  for (const XInterval& a : cs.outer) outer.push_back(arc_to_json(a));
  return {{"inner", inner}, {"outer", outer}};
}

json table_to_json(const PlaceTable& t) {
  json entries = json::object();
  for (const auto& [k, v] : t.entries) entries[k] = xreal_to_json(v);
  json sums = json::array(), products = json::array();
  for (const PlaceRelation& r : t.sums) sums.push_back({r.f, r.g, r.h});
  for (const PlaceRelation& r : t.products) products.push_back({r.f, r.g, r.h});
  return {{"entries", entries}, {"sums", sums}, {"products", products}};
}

PlaceTable table_from_json(const json& j) {
  PlaceTable t;
  const json& entries = j.at("entries");
  for (auto it = entries.begin(); it != entries.end(); ++it)
    t.entries.push_back({it.key(), xreal_from_json(it.value())});
  auto read_rel = [](const json& arr) {
    return PlaceRelation{arr.at(0).get<std::string>(), arr.at(1).get<std::string>(),
                         arr.at(2).get<std::string>()};
  };
  if (j.contains("sums"))
    for (const json& r : j.at("sums")) t.sums.push_back(read_rel(r));
  if (j.contains("products"))
    for (const json& r : j.at("products")) t.products.push_back(read_rel(r));
  return t;
}

std::string fiber_cloud_to_jsonl(const FiberCloud& cloud) {
  std::ostringstream out;
  for (const FiberSample& s : cloud.samples) {
    json w = json::array();
    for (const Rat& x : s.witness) w.push_back(rat_to_string(x));
    json values = json::object();
    for (size_t i = 0; i < cloud.member_ids.size(); ++i)
      values[cloud.member_ids[i]] = xreal_to_json(s.values[i]);
    out << json{{"witness", w}, {"values", values}}.dump() << "\n";
  }
  return out.str();
}

PointCloud point_cloud_from_jsonl(const std::string& text) {
  PointCloud cloud;
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> keys;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    const json& values = j.at("values");
    if (keys.empty())
      for (auto it = values.begin(); it != values.end(); ++it) keys.push_back(it.key());
    std::vector<XReal> pt;
    for (const std::string& k : keys) pt.push_back(xreal_from_json(values.at(k)));
    cloud.points.push_back(std::move(pt));
    cloud.provenance.push_back(j.contains("witness") ? j.at("witness").dump()
                                                     : std::string());
  }
  cloud.arity = keys.empty() ? 1 : keys.size();
  return cloud;
}

json rips_to_json(const RipsSummary& s) {
  return {{"scale", rat_to_string(s.scale)},   {"vertices", s.vertices},
          {"edges", s.edges},                  {"triangles", s.triangles},
          {"betti0", s.betti0},                {"betti1", s.betti1}};
}

json stable_range_to_json(const StableRange& r) {
  json all = json::array();
  for (const auto& [eps, s] : r.summaries) all.push_back(rips_to_json(s));
  return {{"summaries", all},
          {"stable_run",
           {{"begin_index", r.run_begin},
            {"end_index", r.run_end},
            {"betti0", r.run_betti0},
            {"betti1", r.run_betti1}}}};
}

json subfield_report_to_json(const SubfieldReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"root_i", p.root_i},
                     {"root_j", p.root_j},
                     {"opposite", p.opposite},
                     {"distinct_certified", p.distinct_certified},
                     {"certified_with_c", p.certified_with_c},
                     {"sum_degree", p.sum_degree},
                     {"note", p.note}});
  }
  json roots = json::array();
  for (const auto& a : r.roots)
    roots.push_back({{"lo", rat_to_string(a.iso_lo)}, {"hi", rat_to_string(a.iso_hi)}});
  return {{"poly", Poly::from_upoly_x(r.poly).to_string()},
          {"irreducibility", r.irreducibility},
          {"roots", roots},
          {"pairs", pairs},
          {"any_distinct", r.any_distinct},
          {"conclusion", r.conclusion},
          {"text", r.text}};
}

void atomic_write_text(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace graphoid
