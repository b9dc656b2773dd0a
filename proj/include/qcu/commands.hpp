#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcu/mf.hpp"
#include "qcu/serialize.hpp"

namespace qcu {

struct RunConfig {
  Field field = Field::default_prime();
  std::uint64_t seed = 0;
  std::optional<int> degree_cap;
  std::string format = "text";  // text | json
  int verbosity = 0;
};

/// Throws InvalidInput for an unknown format or a negative degree cap.
void validate_config(const RunConfig& cfg);

using Params = std::map<std::string, std::string>;

struct CheckRecord {
  std::string name;
  std::string version;
  bool pass = false;
  std::string detail;
};

/// Outcome of one command: checks in execution order, free-form output
/// lines (tables, matrices) and structured data for the JSON rendering.
struct Transcript {
  std::string command;
  std::vector<CheckRecord> checks;
  std::vector<std::string> output;
  Json data = Json::object();

  bool pass() const;
  void check(const std::string& name, bool ok, const std::string& detail = {});
  /// Deterministic rendering in cfg.format; embeds field, seed and degree cap.
  std::string render(const RunConfig& cfg) const;
};

/// Version tag of each certificate kind, embedded in transcripts.
std::string certificate_version(const std::string& name);

Transcript pencil_command(const RunConfig& cfg, const Params& p);
Transcript mf_command(const RunConfig& cfg, const Params& p);
Transcript clifford_command(const RunConfig& cfg, const Params& p);
Transcript betti_command(const RunConfig& cfg, const Params& p);
Transcript ulrich_command(const RunConfig& cfg, const Params& p);

/// grouplaw | clifford | betti | knorrer | ulrich-e2e.
Transcript run_suite(const RunConfig& cfg, const std::string& name, const Params& p);

/// Writes object (betti | cohomology | candidate) to path in format
/// text | latex | json. Unknown formats throw InvalidInput; I/O errors IoError.
Transcript export_object(const RunConfig& cfg, const std::string& object, const Params& p, const std::string& path,
                         const std::string& format);

// Parameter helpers shared with the C API.
std::vector<Scalar> parse_scalar_list(Field f, const std::string& csv);
Subset parse_subset(const std::string& text);

}  // namespace qcu
