#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "area/prover.hpp"

namespace area {

inline constexpr const char* kTraceSchema = "areaprover.trace/1";

struct DocumentNdg {
  std::string step;
  std::string condition;
  int prefix_order = 0;
  std::string status;  // "consistent" | "inconsistent"
  friend bool operator==(const DocumentNdg&, const DocumentNdg&) = default;
};

struct DocumentModel {
  std::map<std::string, std::pair<std::string, std::string>> points;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  friend bool operator==(const DocumentModel&, const DocumentModel&) = default;
};

/// Serializable view of a proof: every expression is stored as rendered text.
struct TraceDocument {
  std::string name;
  std::string goal;
  std::string verdict;
  std::string reason;
  std::optional<std::string> residual;
  std::optional<DocumentModel> counterexample;
  std::vector<DocumentNdg> ndgs;
  std::vector<TraceStep> steps;
  bool used_area_coords = false;
  std::optional<double> wall_ms;

  friend bool operator==(const TraceDocument&, const TraceDocument&) = default;
};

/// Timing is left out unless requested so documents stay byte-deterministic.
TraceDocument make_document(const ProofResult& result, const std::string& goal, const std::string& name = {},
                            bool include_timing = false);
/// Document for a run stopped at ndg validation.
TraceDocument make_document(const std::vector<NdgCheck>& ndgs, const std::string& verdict, const std::string& reason,
                            const std::string& goal, const std::string& name = {});

std::string render_text(const TraceDocument& doc);
std::string render_structured(const TraceDocument& doc);
/// Throws Parse for malformed documents or an unknown schema.
TraceDocument parse_structured(const std::string& text);

}  // namespace area
