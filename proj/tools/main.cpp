#include "graphoid/run.hpp"

#include <CLI11.hpp>

#include <iostream>

using graphoid::RunManifest;

namespace {

void add_common(CLI::App* cmd, RunManifest& m, std::string& out_dir) {
  cmd->add_option("--out", out_dir, "artifact directory")->capture_default_str();
  cmd->add_option("--seed", m.seed, "seed for randomized sampling")
      ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for graphoids of rational function families, "
               "their real places, and fiber topology probes"};
  app.require_subcommand(1);

  RunManifest m;
  std::string out_dir = "out";
  std::string expr, x_arg, y_arg, sub;
  std::string family_path, point_path, system_path, table_path, cloud_path;

  auto bind = [&](CLI::App* cmd, const std::string& verb) {
    add_common(cmd, m, out_dir);
    cmd->callback([&, verb] { m.verb = verb; });
    return cmd;
  };

  auto* parse = bind(app.add_subcommand("parse", "parse and normalize an expression"),
                     "parse");
  parse->add_option("expr", expr, "expression")->required();

  auto* eval = bind(app.add_subcommand("eval", "evaluate an expression exactly"),
                    "eval");
  eval->add_option("expr", expr, "expression")->required();
  eval->add_option("x", x_arg, "x coordinate")->required();
  eval->add_option("y", y_arg, "y coordinate");

  auto* feas = bind(app.add_subcommand("feas", "decide a strict inequality system"),
                    "feas");
  feas->add_subcommand("check", "check a system file")->fallthrough();
  feas->add_option("system", system_path, "system JSON file");
  std::string depth, boxes;
  feas->add_option("--depth", depth, "bisection depth limit");
  feas->add_option("--boxes", boxes, "box budget");

  auto* member = bind(app.add_subcommand("member", "graphoid membership check"),
                      "member");
  member->add_option("--family", family_path, "family manifest JSON")->required();
  member->add_option("--point", point_path, "graphoid point JSON")->required();
  std::string radii;
  member->add_option("--radii", radii, "comma-separated decreasing radii");
  member->add_option("--depth", depth, "bisection depth limit");
  member->add_option("--boxes", boxes, "box budget");

  auto* cluster = bind(app.add_subcommand("cluster", "cluster set of a function"),
                       "cluster");
  cluster->add_option("expr", expr, "expression")->required();
  cluster->add_option("x", x_arg, "base x (rational or inf)")->required();
  cluster->add_option("y", y_arg, "base y (rational or inf)");
  std::string subdiv, eps;
  cluster->add_option("--subdiv", subdiv, "log2 of direction cells");
  cluster->add_option("--eps", eps, "radial window");

  auto* fiber = bind(app.add_subcommand("fiber", "sample a graphoid fiber"), "fiber");
  fiber->add_option("--family", family_path, "family manifest JSON")->required();
  fiber->add_option("--point", point_path, "base point JSON")->required();
  std::string count, radius;
  fiber->add_option("--count", count, "sample budget");
  fiber->add_option("--radius", radius, "chordal sampling radius");

  auto* place_check = bind(app.add_subcommand("place-check", "check a place table"),
                           "place-check");
  place_check->add_option("table", table_path, "table JSON file")->required();

  auto* nf = bind(app.add_subcommand("nf", "number field computations"), "nf");
  nf->add_option("sub", sub, "roots | places | distinct | chi")->required();
  std::string poly, element, precision, width, root_idx;
  nf->add_option("poly", poly, "integer polynomial in x")->required();
  nf->add_option("element", element, "comma-separated coordinates over alpha");
  nf->add_option("precision", precision, "rational precision for chi");
  nf->add_option("--width", width, "isolating interval width");
  nf->add_option("--root", root_idx, "which real root indexes alpha");

  auto* probe = bind(app.add_subcommand("probe", "topology probes on clouds"),
                     "probe");
  probe->add_option("sub", sub, "betti | scan")->required();
  probe->add_option("cloud", cloud_path, "cloud JSONL file")->required();
  std::string grid;
  probe->add_option("--eps", eps, "scale for betti");
  probe->add_option("--grid", grid, "comma-separated ascending scales for scan");

  auto* demo = bind(app.add_subcommand(
                        "demo-remark-as",
                        "end-to-end subfield demo on a totally real quartic"),
                    "demo-remark-as");
  demo->add_option("--poly", poly, "quartic to analyze");

  CLI11_PARSE(app, argc, argv);

  auto put = [&](const std::string& k, const std::string& v) {
    if (!v.empty()) m.params[k] = v;
  };
  put("expr", expr);
  put("x", x_arg);
  put("y", y_arg);
  put("sub", sub);
  put("depth", depth);
  put("boxes", boxes);
  put("radii", radii);
  put("subdiv", subdiv);
  put("eps", eps);
  put("count", count);
  put("radius", radius);
  put("poly", poly);
  put("element", element);
  put("precision", precision);
  put("width", width);
  put("root", root_idx);
  put("grid", grid);
  if (!family_path.empty()) m.inputs["family"] = family_path;
  if (!point_path.empty()) m.inputs["point"] = point_path;
  if (!system_path.empty()) m.inputs["system"] = system_path;
  if (!table_path.empty()) m.inputs["table"] = table_path;
  if (!cloud_path.empty()) m.inputs["cloud"] = cloud_path;

  (void)parse;
  (void)eval;
  (void)feas;
  (void)member;
  (void)cluster;
  (void)fiber;
  (void)place_check;
  (void)nf;
  (void)probe;
  (void)demo;
  return graphoid::run_manifest(m, out_dir, std::cout);
}
