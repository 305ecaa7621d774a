#include "area/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "area/corpus.hpp"
#include "area/dsl.hpp"
#include "area/errors.hpp"
#include "area/oracle.hpp"
#include "area/trace_document.hpp"

namespace area {

namespace {

struct Flags {
  std::string file;
  std::string area_coords;
  std::string trace = "text";
  std::optional<int> oracle_check;
  std::optional<std::uint64_t> seed;
  std::int64_t max_ms = 0;
  std::string filter;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProverOptions environment_options() {
  ProverOptions opts;
  if (const char* s = std::getenv("AREAPROVE_SEED")) opts.seed = std::stoull(s);
  if (const char* s = std::getenv("AREAPROVE_ORACLE_SAMPLES")) opts.oracle_samples = std::stoi(s);
  return opts;
}

void apply_flags(const Flags& f, ProverOptions& opts) {
  if (!f.area_coords.empty()) opts.area_coords = parse_area_coords_mode(f.area_coords);
  if (f.seed) opts.seed = *f.seed;
  if (f.oracle_check) opts.oracle_samples = *f.oracle_check;
  opts.max_ms = f.max_ms;
}

int exit_code(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Proved: return kExitProved;
    case VerdictKind::Disproved: return kExitDisproved;
    default: return kExitUndecided;
  }
}

void emit(const TraceDocument& doc, const std::string& format, std::ostream& out) {
  out << (format == "structured" ? render_structured(doc) : render_text(doc));
}

/// Re-checks a Proved verdict on fresh oracle samples.
std::optional<NumericModel> soundness_check(const SourceFile& file, const ProverOptions& opts, int samples) {
  return find_counterexample(file.construction, file.conjecture(), mix_seed(opts.seed, 0xC0FFEE), samples);
}

int cmd_prove(const Flags& f, std::ostream& out, std::ostream& err) {
  SourceFile file = parse(read_file(f.file));
  ProverOptions opts = environment_options();
  file.options.apply(opts);
  apply_flags(f, opts);
  std::string goal = file.goal.to_string();
  ProofResult result;
  try {
    result = prove(file.construction, file.conjecture(), opts);
  } catch (const ConstructionInconsistent& e) {
    std::vector<NdgCheck> checks;
    try {
      ProverOptions sub = opts;
      sub.skip_ndg = true;
      validate(file.construction,
               [&](const Construction& prefix, const NdgCondition& ndg) {
                 Conjecture eq = Conjecture::relation(ndg.lhs, Relation::Eq, ndg.rhs);
                 return !prove_negation_unprovable(prefix, eq, sub);
               },
               checks);
    } catch (const ConstructionInconsistent&) {
    }
    emit(make_document(checks, "ConstructionInconsistent", e.what(), goal), f.trace, out);
    err << "error: " << e.what() << "\n";
    return kExitConstruction;
  }
  TraceDocument doc = make_document(result, goal, {}, f.timing);
  emit(doc, f.trace, out);
  if (result.verdict.kind == VerdictKind::Proved && f.oracle_check && *f.oracle_check > 0) {
    if (auto w = soundness_check(file, opts, *f.oracle_check)) {
      err << "error: oracle found a violating sample for a proved goal: " << w->to_string() << "\n";
      return kExitUndecided;
    }
  }
  return exit_code(result.verdict.kind);
}

int cmd_check(const Flags& f, std::ostream& out, std::ostream& err) {
  SourceFile file = parse(read_file(f.file));
  ProverOptions opts = environment_options();
  file.options.apply(opts);
  apply_flags(f, opts);
  ProverOptions sub = opts;
  sub.skip_ndg = true;
  std::vector<NdgCheck> checks;
  int code = kExitProved;
  std::string message;
  try {
    validate(file.construction,
             [&](const Construction& prefix, const NdgCondition& ndg) {
               Conjecture eq = Conjecture::relation(ndg.lhs, Relation::Eq, ndg.rhs);
               return !prove_negation_unprovable(prefix, eq, sub);
             },
             checks);
  } catch (const ConstructionInconsistent& e) {
    code = kExitConstruction;
    message = e.what();
  }
  if (f.trace == "structured") {
    out << render_structured(make_document(checks, code == 0 ? "Consistent" : "ConstructionInconsistent", message,
                                           file.goal.to_string()));
  } else {
    for (const auto& c : checks) out << "ndg " << c.step << ": " << c.condition << " [" << (c.status == NdgStatus::Consistent ? "consistent" : "inconsistent") << "]\n";
    out << (code == 0 ? "construction consistent" : "construction inconsistent") << "\n";
  }
  if (code != 0) err << "error: " << message << "\n";
  return code;
}

int cmd_corpus(const Flags& f, std::ostream& out, std::ostream&) {
  ProverOptions opts = environment_options();
  apply_flags(f, opts);
  bool forced = !f.area_coords.empty();
  std::vector<CorpusRow> rows = run_corpus(f.filter, opts, forced);
  int code = kExitProved;
  for (const auto& r : rows) {
    if (r.verdict != VerdictKind::Proved) code = kExitUndecided;
  }
  if (f.trace == "structured") {
    nlohmann::ordered_json j;
    j["schema"] = "areaprover.corpus/1";
    j["seed"] = opts.seed;
    j["theorems"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      TraceDocument doc = r.document;
      if (f.timing) doc.wall_ms = r.wall_ms;
      j["theorems"].push_back(nlohmann::ordered_json::parse(render_structured(doc)));
    }
    out << j.dump(2) << "\n";
    return code;
  }
  std::size_t width = 7;
  for (const auto& r : rows) width = std::max(width, r.title.size());
  out << std::left << std::setw(static_cast<int>(width)) << "Theorem" << "  Area Coordinates  " << std::setw(12)
      << "Time (ms)" << "Verdict\n";
  double total = 0;
  for (const auto& r : rows) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << r.wall_ms;
    out << std::left << std::setw(static_cast<int>(width)) << r.title << "  " << std::setw(18)
        << (r.used_area_coords ? "yes" : "no") << std::setw(12) << ms.str() << verdict_name(r.verdict) << "\n";
    total += r.wall_ms;
  }
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(1) << total;
  out << rows.size() << " theorems, total " << ms.str() << " ms\n";
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Area-method theorem prover for plane Euclidean geometry", "areaprove"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--area-coords", f.area_coords, "auto, never or always")
        ->check(CLI::IsMember({"auto", "never", "always"}));
    cmd->add_option("--trace", f.trace, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--oracle-check", f.oracle_check, "oracle samples for counterexample searches and re-checks");
    cmd->add_option("--seed", f.seed, "oracle seed");
    cmd->add_option("--max-ms", f.max_ms, "time limit per proof in milliseconds (0 = none)");
    cmd->add_flag("--timing", f.timing, "include wall time in trace documents");
  };

  CLI::App* prove_cmd = app.add_subcommand("prove", "prove the goal of a .geo file");
  prove_cmd->add_option("file", f.file, "source file")->required();
  add_common(prove_cmd);

  CLI::App* check_cmd = app.add_subcommand("check", "validate the non-degeneracy conditions of a .geo file");
  check_cmd->add_option("file", f.file, "source file")->required();
  add_common(check_cmd);

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "bundled theorem corpus");
  corpus_cmd->require_subcommand(1);
  CLI::App* run_cmd = corpus_cmd->add_subcommand("run", "prove every bundled theorem");
  run_cmd->add_option("--filter", f.filter, "only theorems whose name contains this text");
  add_common(run_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitParse;
  }

  try {
    if (*prove_cmd) return cmd_prove(f, out, err);
    if (*check_cmd) return cmd_check(f, out, err);
    return cmd_corpus(f, out, err);
  } catch (const Error& e) {
    err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Parse:
      case ErrorKind::UnknownPoint:
      case ErrorKind::DuplicatePoint:
      case ErrorKind::InvalidArgument:
        return kExitParse;
      default:
        return kExitConstruction;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace area
