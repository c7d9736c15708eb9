#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace graphoid {

// Reproducible batch run: the verb plus everything needed to replay it.
// The manifest (seed included) is embedded in every artifact; identical
// manifests produce byte-identical artifacts.
struct RunManifest {
  std::string verb;
  std::map<std::string, std::string> inputs;  // paths keyed by role
  std::map<std::string, std::string> params;
  uint64_t seed = 0;
};

// exit codes: 0 ok, 2 bad input, 3 verdict Unknown (distinct from failure)
int run_manifest(const RunManifest& manifest, const std::string& out_dir,
                 std::ostream& out);

} // namespace graphoid
