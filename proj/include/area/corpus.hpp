#pragma once

#include <string>
#include <vector>

#include "area/prover.hpp"
#include "area/trace_document.hpp"

namespace area {

struct CorpusEntry {
  std::string name;    // file stem
  std::string source;  // DSL text
};

/// The theorem files compiled into the library, sorted by name.
const std::vector<CorpusEntry>& bundled_corpus();

/// Display title from the leading `# ` comment line, or the stem.
std::string corpus_title(const CorpusEntry& entry);

struct CorpusRow {
  std::string name;
  std::string title;
  VerdictKind verdict = VerdictKind::Unknown;
  bool used_area_coords = false;
  double wall_ms = 0;
  TraceDocument document;
};

/// Proves every bundled theorem whose stem or title contains `filter`
/// (case-insensitive; empty matches all). Per-file options apply on top of
/// `opts` unless `override_file_options` is set.
std::vector<CorpusRow> run_corpus(const std::string& filter, const ProverOptions& opts,
                                  bool override_file_options = false);

}  // namespace area
