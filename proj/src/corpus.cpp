#include "area/corpus.hpp"

#include <algorithm>
#include <cctype>

#include "area/dsl.hpp"

namespace area {

std::string corpus_title(const CorpusEntry& entry) {
  const std::string& s = entry.source;
  std::size_t start = s.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && s.compare(start, 2, "# ") == 0) {
    std::size_t end = s.find('\n', start);
    return s.substr(start + 2, end == std::string::npos ? std::string::npos : end - start - 2);
  }
  return entry.name;
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

std::vector<CorpusRow> run_corpus(const std::string& filter, const ProverOptions& opts, bool override_file_options) {
  std::vector<CorpusRow> rows;
  std::string needle = lower(filter);
  for (const auto& entry : bundled_corpus()) {
    std::string title = corpus_title(entry);
    if (!needle.empty() && lower(entry.name).find(needle) == std::string::npos &&
        lower(title).find(needle) == std::string::npos) {
      continue;
    }
    SourceFile file = parse(entry.source);
    ProverOptions local = opts;
    if (!override_file_options) file.options.apply(local);
    ProofResult result = prove(file.construction, file.conjecture(), local);
    CorpusRow row;
    row.name = entry.name;
    row.title = title;
    row.verdict = result.verdict.kind;
    row.used_area_coords = result.trace.used_area_coords;
    row.wall_ms = result.trace.wall_ms;
    row.document = make_document(result, file.goal.to_string(), entry.name);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace area
