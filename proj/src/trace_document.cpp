#include "area/trace_document.hpp"

#include <json.hpp>
#include <sstream>

#include "area/errors.hpp"

namespace area {

using nlohmann::ordered_json;

namespace {

DocumentModel to_document(const NumericModel& m) {
  DocumentModel out;
  for (const auto& [name, v] : m.points) out.points[name] = {v.x.get_str(), v.y.get_str()};
  for (const auto& [name, v] : m.parameters) out.parameters[name] = v.get_str();
  out.seed = m.seed;
  return out;
}

std::vector<DocumentNdg> to_document(const std::vector<NdgCheck>& ndgs) {
  std::vector<DocumentNdg> out;
  for (const auto& n : ndgs) {
    out.push_back(DocumentNdg{n.step, n.condition, n.prefix_order,
                              n.status == NdgStatus::Consistent ? "consistent" : "inconsistent"});
  }
  return out;
}

}  // namespace

TraceDocument make_document(const ProofResult& result, const std::string& goal, const std::string& name,
                            bool include_timing) {
  TraceDocument doc;
  doc.name = name;
  doc.goal = goal;
  doc.verdict = verdict_name(result.verdict.kind);
  doc.reason = result.verdict.reason;
  if (result.verdict.residual) doc.residual = result.verdict.residual->to_string();
  if (result.verdict.counterexample) doc.counterexample = to_document(*result.verdict.counterexample);
  doc.ndgs = to_document(result.trace.ndgs);
  doc.steps = result.trace.steps;
  doc.used_area_coords = result.trace.used_area_coords;
  if (include_timing) doc.wall_ms = result.trace.wall_ms;
  return doc;
}

TraceDocument make_document(const std::vector<NdgCheck>& ndgs, const std::string& verdict, const std::string& reason,
                            const std::string& goal, const std::string& name) {
  TraceDocument doc;
  doc.name = name;
  doc.goal = goal;
  doc.verdict = verdict;
  doc.reason = reason;
  doc.ndgs = to_document(ndgs);
  return doc;
}

namespace {

std::string step_line(const TraceStep& s) {
  const std::string arrow = " ⟶ ";
  switch (s.kind) {
    case TraceKind::Eliminate:
      return "eliminate " + s.point + " via " + s.lemma + " (" + s.branch + "): " + s.before + arrow + s.after;
    case TraceKind::Simplify:
      return "simplify after " + s.point + ": " + s.after;
    case TraceKind::Uniformize:
      return "uniformize: " + s.before + arrow + s.after;
    case TraceKind::Pythagoras:
      return "expand pythagorean differences: " + s.before + arrow + s.after;
    case TraceKind::AreaCoords:
      return "area coordinates" + (s.detail.empty() ? std::string() : " (" + s.detail + ")") + ": " + s.before +
             arrow + s.after;
    case TraceKind::ZeroTest:
      if (s.before.empty()) return "clause " + std::to_string(s.clause + 1) + ": " + s.after +
                                   (s.detail.empty() ? std::string() : " (" + s.detail + ")");
      if (s.before == s.after) return "zero test: " + s.after + " (" + s.detail + ")";
      return "zero test: " + s.before + arrow + s.after + " (" + s.detail + ")";
    case TraceKind::Inequality:
      return "inequality: " + s.detail;
    case TraceKind::Oracle:
      return "oracle: " + s.detail;
  }
  return {};
}

}  // namespace

std::string render_text(const TraceDocument& doc) {
  std::ostringstream out;
  bool full = !doc.steps.empty() || !doc.ndgs.empty();
  if (full) {
    if (!doc.name.empty()) out << "theorem: " << doc.name << "\n";
    if (!doc.goal.empty()) out << "goal: " << doc.goal << "\n";
    for (const auto& n : doc.ndgs) {
      out << "ndg " << n.step << ": " << n.condition << " [" << n.status << "]\n";
    }
    for (const auto& s : doc.steps) out << step_line(s) << "\n";
  }
  out << "verdict: " << doc.verdict;
  if (!doc.reason.empty()) out << " (" << doc.reason << ")";
  out << "\n";
  if (doc.residual) out << "residual: " << *doc.residual << "\n";
  if (doc.counterexample) {
    out << "counterexample:";
    for (const auto& [name, xy] : doc.counterexample->points) out << " " << name << "=(" << xy.first << "," << xy.second << ")";
    for (const auto& [name, v] : doc.counterexample->parameters) out << " " << name << "=" << v;
    out << "\n";
  }
  if (full) out << "area coordinates used: " << (doc.used_area_coords ? "yes" : "no") << "\n";
  if (doc.wall_ms) out << "wall time: " << *doc.wall_ms << " ms\n";
  return out.str();
}

namespace {

ordered_json to_json(const TraceDocument& doc) {
  ordered_json j;
  j["schema"] = kTraceSchema;
  j["name"] = doc.name;
  j["goal"] = doc.goal;
  ordered_json v;
  v["kind"] = doc.verdict;
  v["reason"] = doc.reason;
  if (doc.residual) v["residual"] = *doc.residual;
  if (doc.counterexample) {
    ordered_json m;
    ordered_json pts = ordered_json::object();
    for (const auto& [name, xy] : doc.counterexample->points) pts[name] = {xy.first, xy.second};
    m["points"] = pts;
    m["parameters"] = doc.counterexample->parameters;
    m["seed"] = doc.counterexample->seed;
    v["counterexample"] = m;
  }
  j["verdict"] = v;
  j["ndgs"] = ordered_json::array();
  for (const auto& n : doc.ndgs) {
    j["ndgs"].push_back({{"step", n.step}, {"condition", n.condition}, {"prefix_order", n.prefix_order}, {"status", n.status}});
  }
  j["steps"] = ordered_json::array();
  for (const auto& s : doc.steps) {
    j["steps"].push_back({{"kind", trace_kind_name(s.kind)},
                          {"clause", s.clause},
                          {"lemma", s.lemma},
                          {"point", s.point},
                          {"branch", s.branch},
                          {"before", s.before},
                          {"after", s.after},
                          {"detail", s.detail}});
  }
  j["flags"] = {{"used_area_coords", doc.used_area_coords}};
  if (doc.wall_ms) j["timing"] = {{"wall_ms", *doc.wall_ms}};
  return j;
}

}  // namespace

std::string render_structured(const TraceDocument& doc) { return to_json(doc).dump(2) + "\n"; }

TraceDocument parse_structured(const std::string& text) {
  TraceDocument doc;
  try {
    ordered_json j = ordered_json::parse(text);
    if (j.at("schema").get<std::string>() != kTraceSchema) {
      throw Error(ErrorKind::Parse, "unsupported trace schema '" + j.at("schema").get<std::string>() + "'");
    }
    doc.name = j.at("name").get<std::string>();
    doc.goal = j.at("goal").get<std::string>();
    const auto& v = j.at("verdict");
    doc.verdict = v.at("kind").get<std::string>();
    doc.reason = v.at("reason").get<std::string>();
    if (v.contains("residual")) doc.residual = v.at("residual").get<std::string>();
    if (v.contains("counterexample")) {
      const auto& m = v.at("counterexample");
      DocumentModel model;
      for (const auto& [name, xy] : m.at("points").items()) {
        model.points[name] = {xy.at(0).get<std::string>(), xy.at(1).get<std::string>()};
      }
      model.parameters = m.at("parameters").get<std::map<std::string, std::string>>();
      model.seed = m.at("seed").get<std::uint64_t>();
      doc.counterexample = model;
    }
    for (const auto& n : j.at("ndgs")) {
      doc.ndgs.push_back(DocumentNdg{n.at("step").get<std::string>(), n.at("condition").get<std::string>(),
                                     n.at("prefix_order").get<int>(), n.at("status").get<std::string>()});
    }
    for (const auto& s : j.at("steps")) {
      TraceStep step;
      step.kind = parse_trace_kind(s.at("kind").get<std::string>());
      step.clause = s.at("clause").get<int>();
      step.lemma = s.at("lemma").get<std::string>();
      step.point = s.at("point").get<std::string>();
      step.branch = s.at("branch").get<std::string>();
      step.before = s.at("before").get<std::string>();
      step.after = s.at("after").get<std::string>();
      step.detail = s.at("detail").get<std::string>();
      doc.steps.push_back(std::move(step));
    }
    doc.used_area_coords = j.at("flags").at("used_area_coords").get<bool>();
    if (j.contains("timing")) doc.wall_ms = j.at("timing").at("wall_ms").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed trace document: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw Error(ErrorKind::Parse, e.what());
    throw;
  }
  return doc;
}

}  // namespace area
