#pragma once

#include "graphoid/feasibility.hpp"
#include "graphoid/membership.hpp"
#include "graphoid/places.hpp"
#include "graphoid/topo.hpp"

#include <json.hpp>

#include <string>

namespace graphoid {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "graphoid 0.1.0";

json xreal_to_json(const XReal& v);
XReal xreal_from_json(const json& j);

json arc_to_json(const XInterval& a);
XInterval arc_from_json(const json& j);

json box_to_json(const Box& b);
Box box_from_json(const json& j);

// family manifest: a list of {id, expr} (a wrapping {"members": [...]}
// object is accepted too)
json family_to_json(const FunctionFamily& fam);
FunctionFamily family_from_json(const json& j);

json point_to_json(const GraphoidPoint& p);
GraphoidPoint point_from_json(const json& j);

json system_to_json(const InequalitySystem& sys);
InequalitySystem system_from_json(const json& j);

json feas_verdict_to_json(const FeasibilityVerdict& v);
json membership_verdict_to_json(const MembershipVerdict& v);
json cluster_to_json(const ClusterSet& cs);

// place table schema: {entries: {expr: xreal}, sums: [[f,g,h]], products: [[f,g,h]]}
json table_to_json(const PlaceTable& t);
PlaceTable table_from_json(const json& j);

// clouds travel as JSON lines: {witness: [x, y], values: {id: xreal}}
std::string fiber_cloud_to_jsonl(const FiberCloud& cloud);
PointCloud point_cloud_from_jsonl(const std::string& text);

json rips_to_json(const RipsSummary& s);
json stable_range_to_json(const StableRange& r);

json subfield_report_to_json(const SubfieldReport& r);

// write-then-rename so artifacts appear atomically
void atomic_write_text(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace graphoid
