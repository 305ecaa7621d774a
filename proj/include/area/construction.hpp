#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "area/atom.hpp"
#include "area/expr_tree.hpp"
#include "area/lowering.hpp"

namespace area {

enum class StepKind { ECS1 = 1, ECS2, ECS3, ECS4, ECS5 };

/// One elementary construction step. For ECS1, `points` lists the new free
/// points; otherwise points[0] is the new point followed by the arguments in
/// ECS order:
///   ECS2(Y,U,V,P,Q)  intersection of line UV and line PQ
///   ECS3(Y,P,U,V)    foot of the perpendicular from P to line UV
///   ECS4(Y,W,U,V,r)  WY/UV = r on the parallel to UV through W
///   ECS5(Y,U,V,r)    4*S[U,V,Y] = r*P[U,V,U] on the perpendicular at U
struct Step {
  StepKind kind = StepKind::ECS1;
  std::vector<std::string> points;
  std::optional<ExprTree> r;

  static Step free_points(std::vector<std::string> names);
  static Step intersection(std::string y, std::string u, std::string v, std::string p, std::string q);
  static Step foot(std::string y, std::string p, std::string u, std::string v);
  static Step on_parallel(std::string y, std::string w, std::string u, std::string v, ExprTree r);
  static Step on_perpendicular(std::string y, std::string u, std::string v, ExprTree r);

  const std::string& y() const { return points.front(); }
  /// i-th argument after the new point (not meaningful for ECS1).
  const std::string& arg(std::size_t i) const { return points.at(i + 1); }
  std::vector<std::string> introduced() const;
  std::vector<std::string> dependencies() const;

  std::string to_string() const;
  friend bool operator==(const Step&, const Step&) = default;
};

/// The negation of `lhs = rhs` is required: the step is consistent when
/// `lhs = rhs` is not provable over the preceding construction.
struct NdgCondition {
  ExprTree lhs;
  ExprTree rhs;

  std::string to_string() const;  // "refute <lhs> = <rhs>"
};

std::vector<NdgCondition> ndg_conditions(const Step& step);

struct PointInfo {
  std::string name;
  int order = 0;
  std::size_t step = 0;  // index into steps()
};

/// An ordered, immutable-by-convention record of construction steps.
class Construction {
 public:
  /// Throws UnknownPoint or DuplicatePoint.
  void append_step(Step step);
  Construction with_step(Step step) const;
  void declare_parameter(const std::string& name);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  const std::set<std::string>& parameters() const noexcept { return parameters_; }
  const std::vector<PointInfo>& points() const noexcept { return points_; }
  int max_order() const noexcept { return static_cast<int>(points_.size()); }
  bool empty() const noexcept { return points_.empty(); }

  bool has_point(const std::string& name) const { return index_.count(name) > 0; }
  /// Throws UnknownPoint.
  const PointInfo& info(const std::string& name) const;
  PointRef point(const std::string& name) const;
  const Step& step_of(const std::string& name) const;
  bool is_free(const std::string& name) const;
  std::vector<PointRef> free_points() const;

  /// Resolves names to PointRefs; unknown names throw UnknownPoint.
  PointResolver resolver() const;

  /// Sub-construction of all points with order <= k. Throws OutOfRange.
  Construction prefix(int k) const;

  std::string to_string() const;

 private:
  std::vector<Step> steps_;
  std::vector<PointInfo> points_;
  std::map<std::string, std::size_t> index_;
  std::set<std::string> parameters_;
};

enum class NdgStatus { Consistent, Inconsistent };

struct NdgCheck {
  std::string step;
  std::string condition;
  int prefix_order = 0;
  NdgStatus status = NdgStatus::Consistent;
};

/// Decides whether `ndg.lhs = ndg.rhs` is provable over `prefix`.
using NdgProver = std::function<bool(const Construction& prefix, const NdgCondition& ndg)>;

/// Checks every ndg in construction order over the construction preceding
/// its step. Stops at, and throws ConstructionInconsistent for, the first
/// violated condition; `checks` receives every record including the failing one.
void validate(const Construction& c, const NdgProver& prover, std::vector<NdgCheck>& checks);
std::vector<NdgCheck> validate(const Construction& c, const NdgProver& prover);

}  // namespace area
