#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "preclusion/graph.hpp"
#include "preclusion/hypercube.hpp"
#include "preclusion/reduction.hpp"
#include "preclusion/solver.hpp"

namespace preclusion {

inline constexpr const char* kToolName = "preclusion";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct InputSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  std::string family;  // generator spec, or "input" for parsed graphs
  friend bool operator==(const InputSummary&, const InputSummary&) = default;
};

struct ReportStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  friend bool operator==(const ReportStats&, const ReportStats&) = default;
};

// Everything a CLI command prints. Serializes to JSON and back without loss.
struct RunReport {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  int schema_version = kReportSchemaVersion;
  std::string command;
  // Normalized arguments; --jobs is left out so reports compare equal across
  // thread counts.
  std::vector<std::string> arguments;
  std::optional<InputSummary> input;
  nlohmann::json result = nlohmann::json::object();
  std::string outcome;  // "feasible", "infeasible", "pass", "fail", "error"
  int exit_code = 0;
  bool deterministic = false;
  ReportStats stats;
  double wall_seconds = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json to_json(const RunReport& report);
// Throws ParseError when required fields are missing or mistyped.
RunReport report_from_json(const nlohmann::json& doc);

// The report with its "timing" object removed, for determinism comparisons.
nlohmann::json without_timing(nlohmann::json doc);

nlohmann::json edge_list_json(const Graph& g, const EdgeList& edges);
nlohmann::json certificate_json(const Graph& g, const PreclusionCertificate& cert);
nlohmann::json lemma4_json(const Graph& q, const Lemma4Report& report);
nlohmann::json lemma5_json(const Graph& q, const Lemma5Report& report);
nlohmann::json mps_hypercube_json(const Graph& q, const MpsHypercubeReport& report);

}  // namespace preclusion
