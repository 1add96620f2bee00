#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "equicoh/errors.hpp"
#include "equicoh/scenario.hpp"

using namespace equicoh;

static const char* kScenario = R"(schema: 1
# the torus-equivariant projective plane
group:
  family: sl
  n: 3
  form: borel
variety:
  kind: projective
  parameters: 2
tasks:
  - present
  - hilbert
  - fiber-check
  - components
  - gkm-compare
  - weyl-check
  - restrict: 0 1
  - localize
options:
  cutoff: 12
  seed: 1
  format: machine
)";

// every line of the machine report is pinned; any byte drift is a failure
static const char* kMachineReport = R"(schema: 1
form: borel
group: sl3
variety: projective(2)
cutoff: 12
seed: 1
begin present
relation: x1^3 - x1^2*v1 - x1^2*v2 + x1*v1*v2
eliminated: x2 = x1^2 - x1*v1
end present
begin hilbert
series: (1 + t^2 + t^4)/((1 - t^2)^2)
counts: 1 0 3 0 6 0 9 0 12 0 15 0 18
end hilbert
begin fiber-check
sample: point=(1,2) multiplicity=3 distinct=3 radical=yes
sample: point=(3,4) multiplicity=3 distinct=3 radical=yes
sample: point=(5,6) multiplicity=3 distinct=3 radical=yes
sample: point=(7,8) multiplicity=3 distinct=3 radical=yes
sample: point=(9,10) multiplicity=3 distinct=3 radical=yes
zero: multiplicity=3 distinct=1
verdict: pass
end fiber-check
begin components
count: 3
component: 0 | x1 = 0 | x2 = 0
component: 1 | x1 = v1 | x2 = 0
component: 2 | x1 = v2 | x2 = -v1*v2 + v2^2
end components
begin gkm-compare
vertices: 3
edge: 0 -- 1 | -v1
edge: 0 -- 2 | -v2
edge: 1 -- 2 | v1 - v2
gkm-counts: 1 0 3 0 6 0 9 0 12 0 15 0 18
scheme-counts: 1 0 3 0 6 0 9 0 12 0 15 0 18
verdict: pass
end gkm-compare
begin weyl-check
generators: 2
invariant-counts: 1 0 1 0 2 0 2 0 3 0 3 0 4
verdict: pass
end weyl-check
begin restrict
labels: 0 1
subset: 0 1
counts: 1 0 3 0 5 0 7 0 9 0 11 0 13
end restrict
begin localize
entry: 0 | k=1 | lhs=-1/3*v1 - 1/3*v2 | rhs=-1/3*v1 - 1/3*v2 | pass
entry: 1 | k=1 | lhs=2/3*v1 - 1/3*v2 | rhs=2/3*v1 - 1/3*v2 | pass
entry: 2 | k=1 | lhs=-1/3*v1 + 2/3*v2 | rhs=-1/3*v1 + 2/3*v2 | pass
verdict: pass
end localize
verdict: pass
)";

TEST_CASE("scenario files parse into structured runs") {
  Scenario s = parse_scenario(kScenario);
  CHECK(s.group_n == 3);
  CHECK(s.form == GroupForm::Borel);
  CHECK(s.kind == ChartKind::Projective);
  CHECK(s.parameters == std::vector<int>{2});
  REQUIRE(s.tasks.size() == 8);
  CHECK(s.tasks[0].kind == TaskKind::Present);
  CHECK(s.tasks[6].kind == TaskKind::Restrict);
  CHECK(s.tasks[6].subset == std::vector<int>{0, 1});
  CHECK(s.cutoff == 12);
  CHECK(s.seed == 1);
  CHECK(s.machine);
  validate_scenario(s);
}

TEST_CASE("machine report is pinned byte for byte") {
  Scenario s = parse_scenario(kScenario);
  RunResult r = run_scenario(s);
  CHECK(r.verified_ok);
  CHECK(r.report == kMachineReport);
  // and it is reproducible
  CHECK(run_scenario(s).report == r.report);
}

TEST_CASE("text report carries the same facts") {
  Scenario s = parse_scenario(kScenario);
  s.machine = false;
  s.tasks = {{TaskKind::Present, {}}, {TaskKind::Hilbert, {}}};
  std::string rep = run_scenario(s).report;
  CHECK(rep.find("scenario: borel sl3 on projective(2)") == 0);
  CHECK(rep.find("cutoff: 12  seed: 1") != std::string::npos);
  CHECK(rep.find("  relation: x1^3 - x1^2*v1 - x1^2*v2 + x1*v1*v2") != std::string::npos);
  CHECK(rep.find("  series: (1 + t^2 + t^4)/((1 - t^2)^2)") != std::string::npos);
  CHECK(rep.find("verdict: pass") != std::string::npos);
}

TEST_CASE("parse errors carry line and column") {
  auto expect_error = [](const std::string& text, int line, int column) {
    try {
      parse_scenario(text);
      FAIL_CHECK("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.column == column);
    }
  };

  expect_error("schema: 2\n", 1, 1);
  expect_error("", 1, 1);
  expect_error("schema: 1\ngroup:\n\tfamily: sl\n", 3, 1);
  expect_error("schema: 1\ngroup:\n family: sl\n", 3, 1);  // one-space indent
  expect_error(
      "schema: 1\ngroup:\n  family: sl\n  n: 3\n  form: maximal\n"
      "variety:\n  kind: projective\n  parameters: 2\ntasks:\n  - present\n",
      5, 9);
  expect_error(
      "schema: 1\ngroup:\n  family: su\n  n: 3\n  form: borel\n"
      "variety:\n  kind: projective\n  parameters: 2\ntasks:\n  - present\n",
      3, 11);
  expect_error(
      "schema: 1\ngroup:\n  family: sl\n  n: 3\n  n: 4\n  form: borel\n"
      "variety:\n  kind: projective\n  parameters: 2\ntasks:\n  - present\n",
      5, 3);  // duplicate key
  expect_error(
      "schema: 1\ngroup:\n  family: sl\n  n: 3\n  form: borel\n"
      "variety:\n  kind: projective\n  parameters: 2 5\ntasks:\n  - present\n",
      8, 15);  // projective takes one parameter
  expect_error(
      "schema: 1\ngroup:\n  family: sl\n  n: 3\n  form: borel\n"
      "variety:\n  kind: projective\n  parameters: 2\ntasks:\n  - vanish\n",
      10, 5);  // unknown task
  expect_error(
      "schema: 1\ngroup:\n  family: sl\n  n: 3\n  form: borel\n"
      "variety:\n  kind: projective\n  parameters: 2\ntasks:\n  - present\n"
      "options:\n  cutoff: 999\n",
      12, 11);  // cutoff out of range
}

TEST_CASE("semantic validation") {
  auto scenario_with = [](GroupForm form, ChartKind kind, std::vector<int> params,
                          std::vector<ScenarioTask> tasks) {
    Scenario s;
    s.form = form;
    s.group_n = 3;
    s.kind = kind;
    s.parameters = std::move(params);
    s.tasks = std::move(tasks);
    return s;
  };

  // components/restrict need a solvable form: the section scheme is irreducible
  CHECK_THROWS_AS(validate_scenario(scenario_with(GroupForm::Kostant, ChartKind::Projective,
                                                  {2}, {{TaskKind::Components, {}}})),
                  Error);
  // moment-graph comparison needs the full torus
  CHECK_THROWS_AS(
      validate_scenario(scenario_with(GroupForm::Kostant, ChartKind::Projective, {2},
                                      {{TaskKind::GkmCompare, {}}})),
      Error);
  // restrict subset must name existing fixed points
  CHECK_THROWS_AS(validate_scenario(scenario_with(GroupForm::Borel, ChartKind::Projective, {2},
                                                  {{TaskKind::Restrict, {7}}})),
                  Error);
  // iterated bundles carry only solvable forms
  CHECK_THROWS_AS(
      validate_scenario(scenario_with(GroupForm::Kostant, ChartKind::BottSamelson, {1, 2},
                                      {{TaskKind::Present, {}}})),
      Error);
  // embedded forms act through sl2 only
  Scenario emb = scenario_with(GroupForm::EmbeddedSl2Borel, ChartKind::Projective, {4},
                               {{TaskKind::Present, {}}});
  CHECK_THROWS_AS(validate_scenario(emb), Error);
  emb.group_n = 2;
  validate_scenario(emb);

  // the good scenario passes as parsed
  validate_scenario(parse_scenario(kScenario));
}

TEST_CASE("catalog is fixed") {
  std::string cat = builtin_catalog();
  CHECK(cat == builtin_catalog());
  CHECK(cat.find("schema: 1\n") == 0);
  CHECK(cat.find("variety: projective(1) | fixed-points: 2\n") != std::string::npos);
  CHECK(cat.find("variety: grassmannian(2,4) | fixed-points: 6\n") != std::string::npos);
  CHECK(cat.find("variety: flag(3) | fixed-points: 6\n") != std::string::npos);
  CHECK(cat.find("variety: bott_samelson(1,2,1) | fixed-points: 8\n") != std::string::npos);
  CHECK(cat.find("forms: borel kostant embedded_sl2_borel embedded_sl2_kostant\n") !=
        std::string::npos);
  CHECK(cat.find("tasks: present hilbert fiber-check components gkm-compare weyl-check "
                 "restrict localize\n") != std::string::npos);
}

TEST_CASE("reports for the other chart kinds") {
  // grassmannian with the embedded form: six families in the atlas
  Scenario s;
  s.form = GroupForm::EmbeddedSl2Borel;
  s.group_n = 2;
  s.kind = ChartKind::Grassmannian;
  s.parameters = {2, 4};
  s.tasks = {{TaskKind::Components, {}}, {TaskKind::Localize, {}}};
  s.cutoff = 8;
  s.machine = true;
  validate_scenario(s);
  RunResult r = run_scenario(s);
  CHECK(r.verified_ok);
  CHECK(r.report.find("count: 6") != std::string::npos);
  CHECK(r.report.find("verdict: pass") != std::string::npos);

  // bott-samelson hilbert series
  Scenario b;
  b.form = GroupForm::Borel;
  b.group_n = 3;
  b.kind = ChartKind::BottSamelson;
  b.parameters = {1, 2, 1};
  b.tasks = {{TaskKind::Hilbert, {}}};
  b.cutoff = 8;
  b.machine = true;
  validate_scenario(b);
  CHECK(run_scenario(b).report.find(
            "series: (1 + 3*t^2 + 3*t^4 + t^6)/((1 - t^2)^2)") != std::string::npos);
}
