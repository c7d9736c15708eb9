#include <doctest.h>

#include "graphoid/io.hpp"
#include "graphoid/run.hpp"

#include <filesystem>
#include <sstream>

using namespace graphoid;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("graphoid_test_" + tag);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("json round trips for the wire formats") {
  XInterval a(xfin(rat(1, 3)), xinf());
  XInterval back = arc_from_json(arc_to_json(a));
  CHECK(back.lo() == a.lo());
  CHECK(back.hi() == a.hi());

  FunctionFamily fam({{"f", parse_ratfunc("x/y")}, {"g", parse_ratfunc("x^2+1")}});
  FunctionFamily fam2 = family_from_json(family_to_json(fam));
  CHECK(fam2.at("f") == fam.at("f"));
  CHECK(fam2.at("g") == fam.at("g"));

  GraphoidPoint pt;
  pt.base = {xfin(0), xinf()};
  pt.values = {{"f", xfin(rat(-7, 3))}};
  GraphoidPoint pt2 = point_from_json(point_to_json(pt));
  CHECK(pt2.base[1].is_infinite());
  CHECK(pt2.value_of("f") == xfin(rat(-7, 3)));

  PlaceTable t;
  t.set_entry("0", xfin(0));
  t.set_entry("1", xfin(1));
  t.sums.push_back({"0", "1", "1"});
  PlaceTable t2 = table_from_json(table_to_json(t));
  CHECK(t2.has_entry("0"));
  REQUIRE(t2.sums.size() == 1);
  CHECK(t2.sums[0].h == "1");

  InequalitySystem sys(Box({XInterval(xfin(-1), xfin(1))}));
  sys.constraints.push_back({Poly::variable_x(), Rel::GreaterZero});
  InequalitySystem sys2 = system_from_json(system_to_json(sys));
  CHECK(sys2.constraints.size() == 1);
  CHECK(sys2.constraints[0].rel == Rel::GreaterZero);
}

TEST_CASE("eval verb prints the compactified value") {
  TempDir dir("eval");
  RunManifest m;
  m.verb = "eval";
  m.params = {{"expr", "x/y"}, {"x", "1"}, {"y", "0"}};
  std::ostringstream out;
  CHECK(run_manifest(m, dir.str(), out) == 0);
  CHECK(out.str() == "inf\n");
}

TEST_CASE("artifacts embed the manifest and the tool version") {
  TempDir dir("artifact");
  RunManifest m;
  m.verb = "parse";
  m.params = {{"expr", "(x^2-1)/(x-1)"}};
  m.seed = 9;
  std::ostringstream out;
  REQUIRE(run_manifest(m, dir.str(), out) == 0);
  json artifact = json::parse(read_text_file(dir.file("parse.json")));
  CHECK(artifact.at("version") == kToolVersion);
  CHECK(artifact.at("manifest").at("verb") == "parse");
  CHECK(artifact.at("manifest").at("seed") == 9);
  CHECK(artifact.at("result").at("canonical") == "x + 1");
}

TEST_CASE("bad input exits with code 2 and a machine-readable error") {
  TempDir dir("bad");
  RunManifest m;
  m.verb = "parse";
  m.params = {{"expr", "x +"}};
  std::ostringstream out;
  CHECK(run_manifest(m, dir.str(), out) == 2);
  CHECK(json::parse(out.str()).contains("error"));

  RunManifest m2;
  m2.verb = "no-such-verb";
  std::ostringstream out2;
  CHECK(run_manifest(m2, dir.str(), out2) == 2);
}

TEST_CASE("member verb writes a verdict artifact") {
  TempDir dir("member");
  atomic_write_text(dir.file("fam.json"), R"([{"id":"f","expr":"x/y"}])");
  atomic_write_text(dir.file("pt.json"),
                    R"({"base":["1","1"],"values":{"f":"1"}})");
  RunManifest m;
  m.verb = "member";
  m.inputs = {{"family", dir.file("fam.json")}, {"point", dir.file("pt.json")}};
  m.params = {{"radii", "1/10,1/100"}};
  std::ostringstream out;
  CHECK(run_manifest(m, dir.str(), out) == 0);
  json artifact = json::parse(read_text_file(dir.file("member.json")));
  CHECK(artifact.at("result").at("verdict") == "confirmed_to_radius");
}

TEST_CASE("fiber then probe: the cloud format is shared") {
  TempDir dir("fiber");
  atomic_write_text(dir.file("fam.json"), R"([{"id":"f","expr":"x/y"}])");
  atomic_write_text(dir.file("pt.json"),
                    R"({"base":["0","0"],"values":{"f":"0"}})");
  RunManifest m;
  m.verb = "fiber";
  m.inputs = {{"family", dir.file("fam.json")}, {"point", dir.file("pt.json")}};
  m.params = {{"count", "32"}, {"radius", "1/1000"}};
  m.seed = 5;
  std::ostringstream out;
  REQUIRE(run_manifest(m, dir.str(), out) == 0);

  PointCloud cloud = point_cloud_from_jsonl(read_text_file(dir.file("cloud.jsonl")));
  CHECK(cloud.points.size() == 32);
  CHECK(cloud.arity == 1);

  RunManifest probe;
  probe.verb = "probe";
  probe.inputs = {{"cloud", dir.file("cloud.jsonl")}};
  probe.params = {{"sub", "betti"}, {"eps", "1/2"}};
  std::ostringstream out2;
  CHECK(run_manifest(probe, dir.str(), out2) == 0);
  json artifact = json::parse(read_text_file(dir.file("probe.json")));
  CHECK(artifact.at("result").at("betti0").get<long>() >= 1);
}

TEST_CASE("identical manifests reproduce byte-identical artifacts") {
  TempDir a("det_a"), b("det_b");
  for (const TempDir* dir : {&a, &b}) {
    atomic_write_text(dir->file("fam.json"), R"([{"id":"f","expr":"x/y"}])");
    atomic_write_text(dir->file("pt.json"),
                      R"({"base":["0","0"],"values":{"f":"inf"}})");
    RunManifest m;
    m.verb = "fiber";
    m.inputs = {{"family", dir->file("fam.json")}, {"point", dir->file("pt.json")}};
    m.params = {{"count", "48"}, {"radius", "1/100"}};
    m.seed = 12345;
    std::ostringstream out;
    REQUIRE(run_manifest(m, dir->str(), out) == 0);
  }
  CHECK(read_text_file(a.file("cloud.jsonl")) == read_text_file(b.file("cloud.jsonl")));
  // manifests embed input paths, so only the cloud artifact is compared here;
  // the full determinism criterion runs in the acceptance suite
}

TEST_CASE("nf chi verb computes a canonical place value") {
  TempDir dir("chi");
  RunManifest m;
  m.verb = "nf";
  m.params = {{"sub", "chi"},
              {"poly", "x^2-2"},
              {"element", "0,1"},
              {"precision", "1/1000"},
              {"root", "1"}};
  std::ostringstream out;
  REQUIRE(run_manifest(m, dir.str(), out) == 0);
  json artifact = json::parse(read_text_file(dir.file("nf.json")));
  Rat v = rat_from_string(artifact.at("result").at("value").get<std::string>());
  CHECK(rat_abs(v - rat(141421, 100000)) < rat(1, 100));
}

TEST_CASE("place-check verb reports violations without failing") {
  TempDir dir("pc");
  atomic_write_text(dir.file("table.json"),
                    R"({"entries":{"0":"0","1":"1","x":"2","2*x":"5"},
                        "sums":[["x","x","2*x"]],"products":[]})");
  RunManifest m;
  m.verb = "place-check";
  m.inputs = {{"table", dir.file("table.json")}};
  std::ostringstream out;
  CHECK(run_manifest(m, dir.str(), out) == 0);
  json artifact = json::parse(read_text_file(dir.file("place-check.json")));
  CHECK(artifact.at("result").at("violations").size() == 1);
}
