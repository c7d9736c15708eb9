#include "graphoid/run.hpp"

#include "graphoid/io.hpp"

#include <filesystem>
#include <sstream>

namespace graphoid {

namespace {

json manifest_to_json(const RunManifest& m) {
  json inputs = json::object(), params = json::object();
  for (const auto& [k, v] : m.inputs) inputs[k] = v;
  for (const auto& [k, v] : m.params) params[k] = v;
  return {{"verb", m.verb}, {"inputs", inputs}, {"params", params}, {"seed", m.seed}};
}

std::string param(const RunManifest& m, const std::string& key,
                  const std::string& fallback = "") {
  auto it = m.params.find(key);
  if (it != m.params.end()) return it->second;
  if (fallback.empty())
    throw std::invalid_argument("missing required parameter --" + key);
  return fallback;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(rat_from_string(item));
  return out;
}

std::vector<Rat> default_radii() {
  std::vector<Rat> r;
  Rat x(1, 10);
  for (int i = 0; i < 6; ++i) {
    r.push_back(x);
    x /= 10;
  }
  return r;
}

struct ArtifactWriter {
  const RunManifest& manifest;
  std::string dir;

  void write(const std::string& name, const json& result) const {
    json artifact{{"version", kToolVersion},
                  {"manifest", manifest_to_json(manifest)},
                  {"result", result}};
    atomic_write_text(dir + "/" + name, artifact.dump(2) + "\n");
  }
  void write_raw(const std::string& name, const std::string& content) const {
    atomic_write_text(dir + "/" + name, content);
  }
};

GraphoidPoint load_point(const RunManifest& m) {
  return point_from_json(json::parse(read_text_file(m.inputs.at("point"))));
}

FunctionFamily load_family(const RunManifest& m) {
  return family_from_json(json::parse(read_text_file(m.inputs.at("family"))));
}

UPoly parse_upoly_arg(const std::string& text) {
  RatFunc f = parse_ratfunc(text);
  if (!(f.den() == Poly::constant(Rat(1))) || f.num().depends_on_y())
    throw std::invalid_argument("expected a one-variable polynomial: " + text);
  return f.num().to_upoly_x();
}

int run_impl(const RunManifest& m, const std::string& out_dir, std::ostream& out) {
  std::filesystem::create_directories(out_dir);
  ArtifactWriter w{m, out_dir};

  if (m.verb == "parse") {
    RatFunc f = parse_ratfunc(param(m, "expr"));
    json result{{"expr", param(m, "expr")},
                {"canonical", f.to_string()},
                {"num", f.num().to_string()},
                {"den", f.den().to_string()},
                {"arity", f.arity()}};
    w.write("parse.json", result);
    out << f.to_string() << "\n";
    return 0;
  }

  if (m.verb == "eval") {
    RatFunc f = parse_ratfunc(param(m, "expr"));
    Rat x = rat_from_string(param(m, "x"));
    Rat y = rat_from_string(param(m, "y", "0"));
    auto v = eval_exact(f, x, y);
    std::string shown = v ? v->to_string() : std::string("undefined");
    w.write("eval.json", json{{"value", shown}});
    out << shown << "\n";
    return 0;
  }

  if (m.verb == "feas") {
    InequalitySystem sys =
        system_from_json(json::parse(read_text_file(m.inputs.at("system"))));
    FeasOptions opts;
    opts.max_depth = std::stoi(param(m, "depth", "40"));
    opts.max_boxes = std::stol(param(m, "boxes", "1000000"));
    FeasibilityVerdict v = feasible(sys, opts);
    w.write("feas.json", feas_verdict_to_json(v));
    out << feas_verdict_to_json(v)["verdict"].get<std::string>() << "\n";
    return v.kind == FeasibilityVerdict::Kind::Unknown ? 3 : 0;
  }

  if (m.verb == "member") {
    FunctionFamily fam = load_family(m);
    GraphoidPoint pt = load_point(m);
    std::vector<Rat> radii = m.params.count("radii")
                                 ? parse_rat_list(m.params.at("radii"))
                                 : default_radii();
    MemberOptions opts;
    opts.feas.max_depth = std::stoi(param(m, "depth", "40"));
    opts.feas.max_boxes = std::stol(param(m, "boxes", "200000"));
    MembershipVerdict v = member(pt, fam, radii, opts);
    w.write("member.json", membership_verdict_to_json(v));
    out << membership_verdict_to_json(v)["verdict"].get<std::string>() << "\n";
    return v.kind == MembershipVerdict::Kind::Unknown ? 3 : 0;
  }

  if (m.verb == "cluster") {
    RatFunc f = parse_ratfunc(param(m, "expr"));
    std::vector<XReal> at;
    at.push_back(XReal::from_string(param(m, "x")));
    if (f.depends_on_y() || m.params.count("y"))
      at.push_back(XReal::from_string(param(m, "y", "0")));
    ClusterBudget budget;
    budget.t_subdiv_log2 = std::stoi(param(m, "subdiv", "10"));
    budget.radial_eps = rat_from_string(param(m, "eps", "1/1000000"));
    ClusterSet cs = cluster_set(f, at, budget);
    w.write("cluster.json", cluster_to_json(cs));
    out << cluster_to_json(cs).dump() << "\n";
    return 0;
  }

  if (m.verb == "fiber") {
    FunctionFamily fam = load_family(m);
    GraphoidPoint pt = load_point(m);
    size_t count = static_cast<size_t>(std::stol(param(m, "count", "64")));
    Rat radius = rat_from_string(param(m, "radius", "1/1000"));
    FiberCloud cloud = fiber_sample(fam, pt.base, count, radius, m.seed);
    w.write_raw("cloud.jsonl", fiber_cloud_to_jsonl(cloud));
    w.write("fiber.json", json{{"samples", cloud.samples.size()},
                               {"eps_net_sq", rat_to_string(cloud.eps_net_sq)}});
    out << "samples: " << cloud.samples.size() << "\n";
    return 0;
  }

  if (m.verb == "place-check") {
    PlaceTable t = table_from_json(json::parse(read_text_file(m.inputs.at("table"))));
    auto violations = check_place_table(t);
    json arr = json::array();
    for (const auto& v : violations) arr.push_back(v.description);
    w.write("place-check.json", json{{"violations", arr}});
    out << violations.size() << " violation(s)\n";
    return 0;
  }

  if (m.verb == "nf") {
    std::string sub = param(m, "sub");
    UPoly p = parse_upoly_arg(param(m, "poly"));
    if (sub == "roots" || sub == "places") {
      Rat width = rat_from_string(param(m, "width", "1/10000000000"));
      auto places = enumerate_places(p, width);
      json arr = json::array();
      for (const auto& a : places)
        arr.push_back({{"lo", rat_to_string(a.iso_lo)}, {"hi", rat_to_string(a.iso_hi)}});
      w.write("nf.json", json{{"count", places.size()}, {"isolating_intervals", arr}});
      out << places.size() << (sub == "places" ? " real place(s)\n" : " real root(s)\n");
      return 0;
    }
    if (sub == "distinct") {
      SubfieldReport rep = subfields_distinct(p);
      w.write("nf.json", subfield_report_to_json(rep));
      out << rep.text;
      return 0;
    }
    if (sub == "chi") {
      auto places = enumerate_places(p);
      size_t which = static_cast<size_t>(std::stol(param(m, "root", "0")));
      if (which >= places.size())
        throw std::invalid_argument("root index out of range");
      std::vector<Rat> coords = parse_rat_list(param(m, "element"));
      coords.resize(static_cast<size_t>(p.degree()), Rat(0));
      Rat precision = rat_from_string(param(m, "precision"));
      Rat v = canonical_place(places[which], NumberFieldElement{coords}, precision);
      auto bounds = archimedean_bounds(places[which], NumberFieldElement{coords});
      w.write("nf.json", json{{"value", rat_to_string(v)},
                              {"bounds", {rat_to_string(bounds.first),
                                          rat_to_string(bounds.second)}}});
      out << rat_to_string(v) << "\n";
      return 0;
    }
    throw std::invalid_argument("unknown nf subcommand " + sub);
  }

  if (m.verb == "probe") {
    std::string sub = param(m, "sub");
    PointCloud cloud = point_cloud_from_jsonl(read_text_file(m.inputs.at("cloud")));
    if (sub == "betti") {
      Rat eps = rat_from_string(param(m, "eps"));
      RipsSummary s = rips_betti(cloud, eps);
      w.write("probe.json", rips_to_json(s));
      out << "b0=" << s.betti0 << " b1=" << s.betti1 << "\n";
      return 0;
    }
    if (sub == "scan") {
      std::vector<Rat> grid = parse_rat_list(param(m, "grid"));
      StableRange r = stable_range(cloud, grid);
      w.write("probe.json", stable_range_to_json(r));
      out << "stable (b0,b1) = (" << r.run_betti0 << "," << r.run_betti1 << ")\n";
      return 0;
    }
    throw std::invalid_argument("unknown probe subcommand " + sub);
  }

  if (m.verb == "demo-remark-as") {
    UPoly quartic = parse_upoly_arg(param(m, "poly", "x^4-5*x^2+2"));
    SubfieldReport rep = subfields_distinct(quartic);
    // headline data: first certified pair and its honest sum degree
    json extras = json::object();
    for (const auto& pr : rep.pairs) {
      if (pr.distinct_certified) {
        MinPolyResult s =
            min_poly_of_sum(rep.roots[pr.root_i], rep.roots[pr.root_j]);
        extras = json{{"pair", {pr.root_i, pr.root_j}},
                      {"min_poly_of_sum",
                       s.resolved ? Poly::from_upoly_x(s.poly).to_string()
                                  : std::string("unresolved")},
                      {"sum_degree", s.resolved ? s.poly.degree() : -1},
                      {"distinct_via_c", pr.certified_with_c}};
        break;
      }
    }
    json result = subfield_report_to_json(rep);
    result["headline"] = extras;
    w.write("demo-remark-as.json", result);
    out << rep.text;
    return 0;
  }

  throw std::invalid_argument("unknown verb " + m.verb);
}

} // namespace

int run_manifest(const RunManifest& m, const std::string& out_dir, std::ostream& out) {
  try {
    return run_impl(m, out_dir, out);
  } catch (const std::exception& e) {
    json err{{"error", e.what()}, {"manifest", manifest_to_json(m)}};
    out << err.dump() << "\n";
    return 2;
  }
}

} // namespace graphoid
