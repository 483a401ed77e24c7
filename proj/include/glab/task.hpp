#pragma once

#include "glab/reductivity.hpp"

#include <json.hpp>

namespace glab {

using Json = nlohmann::json;

/// Validated, normalized task document. The JSON schema is the single
/// input format; see README for the field reference.
struct TaskSpec {
  Json doc;

  std::string task_name() const { return doc.at("task").at("name").get<std::string>(); }
  Ring ring() const;
};

/// Parses and validates a task document: schema version, ring consistency,
/// expression-tree arities, dominance and characteristic restrictions.
/// Throws std::invalid_argument with a field path on violations.
TaskSpec parse_spec(const std::string& text);

std::string serialize(const TaskSpec& spec);

struct Report {
  Json doc;
  int exit_code = 0;

  std::string dump(int indent = 2) const { return doc.dump(indent); }
};

/// Executes the task: exit code 0 on completed/proven results, 2 when a
/// verdict is inconclusive, 1 on errors (embedded in the report).
Report run_task(const TaskSpec& spec);

/// Overrides for CLI flags; negative values mean "keep the task's value".
struct TaskOverrides {
  long d_max = -1;
  long s_max = -1;
  long degree = -1;
  long seed = -1;
};
TaskSpec apply_overrides(TaskSpec spec, const TaskOverrides& o);

// Module/map serialization (ring, weights, sparse operator triples) ------

Json module_to_json(const GModule& m);
GModule module_from_json(const Json& j, const RootDatum& datum);
Json gmap_to_json(const GMap& f);

/// Builds the module described by an expression tree over the named
/// constructors: standard, trivial, adjoint, conjugation, dual, tensor,
/// sym, nabla, delta, steinberg, explicit.
GModule build_module(const Json& expr, const RootDatum& datum, const Ring& ring);

/// The embedded fixture suite: runs each named fixture against its
/// expected outcome, printing one line per fixture to `out`. Returns true
/// when every fixture behaves as expected.
bool run_embedded_checks(std::ostream& out);

}  // namespace glab
