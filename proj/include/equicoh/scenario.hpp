#pragma once

#include <string>
#include <vector>

#include "equicoh/cohomology.hpp"

namespace equicoh {

enum class TaskKind {
  Present,
  Hilbert,
  FiberCheck,
  Components,
  GkmCompare,
  WeylCheck,
  Restrict,
  Localize,
};

std::string task_name(TaskKind t);

struct ScenarioTask {
  TaskKind kind = TaskKind::Present;
  std::vector<int> subset;  // restrict only: fixed-point label indices
};

// A parsed scenario file: which group form acts on which variety, the ordered
// task list, and the run options.
struct Scenario {
  GroupForm form = GroupForm::Borel;
  int group_n = 0;
  ChartKind kind = ChartKind::Projective;
  std::vector<int> parameters;  // projective: n; grassmannian: k m;
                                // flag: m; bott_samelson: the word
  std::vector<ScenarioTask> tasks;
  int cutoff = 20;
  int seed = 1;
  bool machine = false;
};

// Strict key-value tree parser (`schema: 1` header, sections group / variety
// / tasks / options).  Throws ParseError with 1-based line/column.
Scenario parse_scenario(const std::string& text);

// Chart named by the variety section.
Chart scenario_chart(const Scenario& s);

// Semantic checks beyond the grammar: every task must be valid for the
// scenario's base kind.  Throws Error.
void validate_scenario(const Scenario& s);

struct RunResult {
  std::string report;
  bool verified_ok = true;  // false iff some verification task failed
};

// Executes the tasks in order and renders the report (text or machine
// format per the scenario options).  Byte-deterministic for fixed inputs.
RunResult run_scenario(const Scenario& s);

// Deterministic catalog of the built-in varieties (with fixed-point counts),
// group forms and tasks.
std::string builtin_catalog();

}  // namespace equicoh
