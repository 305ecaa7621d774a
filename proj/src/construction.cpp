#include "area/construction.hpp"

#include "area/errors.hpp"

namespace area {

Step Step::free_points(std::vector<std::string> names) {
  return Step{StepKind::ECS1, std::move(names), std::nullopt};
}

Step Step::intersection(std::string y, std::string u, std::string v, std::string p, std::string q) {
  return Step{StepKind::ECS2, {std::move(y), std::move(u), std::move(v), std::move(p), std::move(q)}, std::nullopt};
}

Step Step::foot(std::string y, std::string p, std::string u, std::string v) {
  return Step{StepKind::ECS3, {std::move(y), std::move(p), std::move(u), std::move(v)}, std::nullopt};
}

Step Step::on_parallel(std::string y, std::string w, std::string u, std::string v, ExprTree r) {
  return Step{StepKind::ECS4, {std::move(y), std::move(w), std::move(u), std::move(v)}, std::move(r)};
}

Step Step::on_perpendicular(std::string y, std::string u, std::string v, ExprTree r) {
  return Step{StepKind::ECS5, {std::move(y), std::move(u), std::move(v)}, std::move(r)};
}

std::vector<std::string> Step::introduced() const {
  if (kind == StepKind::ECS1) return points;
  return {points.front()};
}

std::vector<std::string> Step::dependencies() const {
  if (kind == StepKind::ECS1) return {};
  std::vector<std::string> out(points.begin() + 1, points.end());
  if (r) {
    std::set<std::string> extra;
    r->collect_points(extra);
    for (const auto& p : extra) out.push_back(p);
  }
  return out;
}

std::string Step::to_string() const {
  std::string out = "ECS" + std::to_string(static_cast<int>(kind)) + "(";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) out += ",";
    out += points[i];
  }
  if (r) out += "," + r->to_string();
  return out + ")";
}

std::string NdgCondition::to_string() const { return "refute " + lhs.to_string() + " = " + rhs.to_string(); }

std::vector<NdgCondition> ndg_conditions(const Step& step) {
  auto distinct = [](const std::string& u, const std::string& v) {
    return NdgCondition{ExprTree::P({u, v, u}), ExprTree::constant(Scalar(0))};
  };
  switch (step.kind) {
    case StepKind::ECS1:
      return {};
    case StepKind::ECS2: {
      // Non-parallel lines; this also rules out U = V and P = Q.
      const auto& u = step.arg(0);
      const auto& v = step.arg(1);
      return {NdgCondition{ExprTree::S({step.arg(2), u, v}), ExprTree::S({step.arg(3), u, v})}};
    }
    case StepKind::ECS3:
      return {distinct(step.arg(1), step.arg(2))};
    case StepKind::ECS4:
      return {distinct(step.arg(1), step.arg(2))};
    case StepKind::ECS5:
      return {distinct(step.arg(0), step.arg(1))};
  }
  return {};
}

void Construction::declare_parameter(const std::string& name) {
  if (has_point(name)) throw Error(ErrorKind::DuplicatePoint, "'" + name + "' is already a point");
  parameters_.insert(name);
}

void Construction::append_step(Step step) {
  std::size_t expected = 0;
  switch (step.kind) {
    case StepKind::ECS1: expected = step.points.size(); break;
    case StepKind::ECS2: expected = 5; break;
    case StepKind::ECS3: expected = 4; break;
    case StepKind::ECS4: expected = 4; break;
    case StepKind::ECS5: expected = 3; break;
  }
  if (step.points.empty() || step.points.size() != expected) {
    throw Error(ErrorKind::InvalidArgument, "malformed step " + step.to_string());
  }
  bool needs_r = step.kind == StepKind::ECS4 || step.kind == StepKind::ECS5;
  if (needs_r != step.r.has_value()) throw Error(ErrorKind::InvalidArgument, "malformed step " + step.to_string());

  for (const auto& dep : step.dependencies()) {
    if (!has_point(dep)) {
      throw Error(ErrorKind::UnknownPoint, "unknown point '" + dep + "' in " + step.to_string());
    }
  }
  std::set<std::string> fresh;
  for (const auto& name : step.introduced()) {
    if (has_point(name) || parameters_.count(name) || !fresh.insert(name).second) {
      throw Error(ErrorKind::DuplicatePoint, "point '" + name + "' is already defined");
    }
  }
  if (step.r) {
    std::set<std::string> params;
    step.r->collect_params(params);
    for (const auto& p : params) {
      if (has_point(p) || fresh.count(p)) throw Error(ErrorKind::DuplicatePoint, "'" + p + "' is a point, not a parameter");
      parameters_.insert(p);
    }
  }
  std::size_t index = steps_.size();
  for (const auto& name : step.introduced()) {
    int order = static_cast<int>(points_.size()) + 1;
    index_.emplace(name, points_.size());
    points_.push_back(PointInfo{name, order, index});
  }
  steps_.push_back(std::move(step));
}

Construction Construction::with_step(Step step) const {
  Construction out = *this;
  out.append_step(std::move(step));
  return out;
}

const PointInfo& Construction::info(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorKind::UnknownPoint, "unknown point '" + name + "'");
  return points_[it->second];
}

PointRef Construction::point(const std::string& name) const { return PointRef{name, info(name).order}; }

const Step& Construction::step_of(const std::string& name) const { return steps_[info(name).step]; }

bool Construction::is_free(const std::string& name) const { return step_of(name).kind == StepKind::ECS1; }

std::vector<PointRef> Construction::free_points() const {
  std::vector<PointRef> out;
  for (const auto& p : points_) {
    if (steps_[p.step].kind == StepKind::ECS1) out.push_back(PointRef{p.name, p.order});
  }
  return out;
}

PointResolver Construction::resolver() const {
  return [this](const std::string& name) { return point(name); };
}

Construction Construction::prefix(int k) const {
  if (k < 0 || k > max_order()) {
    throw Error(ErrorKind::OutOfRange, "prefix order " + std::to_string(k) + " outside 0.." + std::to_string(max_order()));
  }
  Construction out;
  out.parameters_ = parameters_;
  for (const auto& step : steps_) {
    if (out.max_order() >= k) break;
    if (step.kind == StepKind::ECS1) {
      std::vector<std::string> names;
      for (const auto& n : step.points) {
        if (out.max_order() + static_cast<int>(names.size()) >= k) break;
        names.push_back(n);
      }
      out.append_step(Step::free_points(std::move(names)));
    } else {
      out.append_step(step);
    }
  }
  return out;
}

std::string Construction::to_string() const {
  std::string out;
  for (const auto& s : steps_) {
    if (!out.empty()) out += "; ";
    out += s.to_string();
  }
  return out;
}

void validate(const Construction& c, const NdgProver& prover, std::vector<NdgCheck>& checks) {
  for (const auto& step : c.steps()) {
    if (step.kind == StepKind::ECS1) continue;
    int order = c.info(step.y()).order - 1;
    Construction before = c.prefix(order);
    for (const auto& ndg : ndg_conditions(step)) {
      bool violated = prover(before, ndg);
      checks.push_back(NdgCheck{step.to_string(), ndg.to_string(), order,
                                violated ? NdgStatus::Inconsistent : NdgStatus::Consistent});
      if (violated) throw ConstructionInconsistent(step.to_string(), ndg.to_string());
    }
  }
}

std::vector<NdgCheck> validate(const Construction& c, const NdgProver& prover) {
  std::vector<NdgCheck> checks;
  validate(c, prover, checks);
  return checks;
}

}  // namespace area
