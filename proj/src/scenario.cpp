#include "equicoh/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "equicoh/errors.hpp"

namespace equicoh {

namespace {

// ---------------------------------------------------------------- parsing

struct Line {
  int number = 0;  // 1-based
  int indent = 0;  // leading spaces
  std::string content;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    size_t tab = raw.find('\t');
    if (tab != std::string::npos)
      throw ParseError(number, static_cast<int>(tab) + 1,
                       "tab characters are not allowed; indent with spaces");
    size_t end = raw.find_last_not_of(' ');
    if (end == std::string::npos) continue;
    raw.erase(end + 1);
    size_t indent = raw.find_first_not_of(' ');
    if (raw[indent] == '#') continue;
    out.push_back({number, static_cast<int>(indent), raw.substr(indent)});
  }
  return out;
}

struct KV {
  std::string key;
  std::string value;  // empty for section headers
  int value_col = 0;
};

KV split_kv(const Line& ln) {
  size_t colon = ln.content.find(':');
  if (colon == std::string::npos)
    throw ParseError(ln.number, ln.indent + 1, "expected `key: value`");
  std::string key = ln.content.substr(0, colon);
  if (key.empty() || key.find(' ') != std::string::npos)
    throw ParseError(ln.number, ln.indent + 1, "malformed key `" + key + "`");
  KV out;
  out.key = key;
  out.value_col = ln.indent + static_cast<int>(colon) + 3;
  if (colon + 1 < ln.content.size()) {
    if (ln.content[colon + 1] != ' ')
      throw ParseError(ln.number, ln.indent + static_cast<int>(colon) + 2,
                       "expected a space after `:`");
    out.value = ln.content.substr(colon + 2);
    if (out.value.empty() || out.value.front() == ' ')
      throw ParseError(ln.number, out.value_col, "malformed value");
  }
  return out;
}

std::vector<std::pair<std::string, int>> split_tokens(const std::string& value, int value_col) {
  std::vector<std::pair<std::string, int>> out;
  size_t i = 0;
  while (i < value.size()) {
    if (value[i] == ' ') {
      ++i;
      continue;
    }
    size_t j = value.find(' ', i);
    if (j == std::string::npos) j = value.size();
    out.emplace_back(value.substr(i, j - i), value_col + static_cast<int>(i));
    i = j;
  }
  return out;
}

int parse_int(int line, int col, const std::string& tok, const std::string& what, int lo,
              int hi) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, col, what + ": `" + tok + "` is not an integer");
  if (v < lo || v > hi)
    throw ParseError(line, col,
                     what + " must be between " + std::to_string(lo) + " and " +
                         std::to_string(hi));
  return v;
}

struct Section {
  std::string name;
  Line header;
  std::vector<Line> entries;
};

std::vector<Section> read_sections(const std::vector<Line>& lines, size_t start) {
  std::vector<Section> out;
  for (size_t i = start; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    if (ln.indent == 0) {
      KV kv = split_kv(ln);
      if (!kv.value.empty())
        throw ParseError(ln.number, kv.value_col, "section headers take no value");
      out.push_back({kv.key, ln, {}});
    } else if (ln.indent == 2) {
      if (out.empty())
        throw ParseError(ln.number, 1, "expected a section header before indented content");
      out.back().entries.push_back(ln);
    } else {
      throw ParseError(ln.number, 1, "indentation must be exactly two spaces");
    }
  }
  return out;
}

struct Entry {
  Line line;
  KV kv;
};

std::map<std::string, Entry> read_keys(const Section& section,
                                       const std::vector<std::string>& allowed) {
  std::map<std::string, Entry> out;
  for (const Line& ln : section.entries) {
    KV kv = split_kv(ln);
    bool known = false;
    for (const auto& a : allowed) known = known || a == kv.key;
    if (!known)
      throw ParseError(ln.number, ln.indent + 1,
                       "unknown key `" + kv.key + "` in the " + section.name + " section");
    if (out.count(kv.key))
      throw ParseError(ln.number, ln.indent + 1, "duplicate key `" + kv.key + "`");
    if (kv.value.empty())
      throw ParseError(ln.number, kv.value_col, "key `" + kv.key + "` needs a value");
    out.emplace(kv.key, Entry{ln, kv});
  }
  return out;
}

const Entry& require_key(const Section& section, const std::map<std::string, Entry>& keys,
                         const std::string& name) {
  auto it = keys.find(name);
  if (it == keys.end())
    throw ParseError(section.header.number, 1,
                     "the " + section.name + " section needs a `" + name + "` key");
  return it->second;
}

GroupForm parse_form(const Entry& e) {
  const std::string& tok = e.kv.value;
  if (tok == "borel") return GroupForm::Borel;
  if (tok == "kostant") return GroupForm::Kostant;
  if (tok == "embedded_sl2_borel") return GroupForm::EmbeddedSl2Borel;
  if (tok == "embedded_sl2_kostant") return GroupForm::EmbeddedSl2Kostant;
  throw ParseError(e.line.number, e.kv.value_col,
                   "unknown form `" + tok +
                       "` (expected borel | kostant | embedded_sl2_borel | "
                       "embedded_sl2_kostant)");
}

ChartKind parse_kind(const Entry& e) {
  const std::string& tok = e.kv.value;
  if (tok == "projective") return ChartKind::Projective;
  if (tok == "grassmannian") return ChartKind::Grassmannian;
  if (tok == "flag") return ChartKind::Flag;
  if (tok == "bott_samelson") return ChartKind::BottSamelson;
  throw ParseError(e.line.number, e.kv.value_col,
                   "unknown variety kind `" + tok +
                       "` (expected projective | grassmannian | flag | bott_samelson)");
}

TaskKind parse_task_name(const Line& ln, int col, const std::string& name) {
  if (name == "present") return TaskKind::Present;
  if (name == "hilbert") return TaskKind::Hilbert;
  if (name == "fiber-check") return TaskKind::FiberCheck;
  if (name == "components") return TaskKind::Components;
  if (name == "gkm-compare") return TaskKind::GkmCompare;
  if (name == "weyl-check") return TaskKind::WeylCheck;
  if (name == "localize") return TaskKind::Localize;
  if (name == "restrict")
    throw ParseError(ln.number, col,
                     "restrict needs a fixed-point subset (`- restrict: 0 1`)");
  throw ParseError(ln.number, col,
                   "unknown task `" + name +
                       "` (expected present | hilbert | fiber-check | components | "
                       "gkm-compare | weyl-check | restrict | localize)");
}

std::vector<int> parse_parameters(ChartKind kind, const Entry& e) {
  auto tokens = split_tokens(e.kv.value, e.kv.value_col);
  std::vector<int> out;
  switch (kind) {
    case ChartKind::Projective:
      if (tokens.size() != 1)
        throw ParseError(e.line.number, e.kv.value_col,
                         "projective takes exactly one parameter (the dimension)");
      out.push_back(parse_int(e.line.number, tokens[0].second, tokens[0].first,
                              "projective dimension", 1, 8));
      break;
    case ChartKind::Grassmannian: {
      if (tokens.size() != 2)
        throw ParseError(e.line.number, e.kv.value_col,
                         "grassmannian takes exactly two parameters `k m`");
      int k = parse_int(e.line.number, tokens[0].second, tokens[0].first,
                        "grassmannian subspace rank", 1, 6);
      int m = parse_int(e.line.number, tokens[1].second, tokens[1].first,
                        "grassmannian ambient dimension", 2, 6);
      if (k >= m)
        throw ParseError(e.line.number, tokens[0].second,
                         "grassmannian needs k < m");
      out = {k, m};
      break;
    }
    case ChartKind::Flag:
      if (tokens.size() != 1)
        throw ParseError(e.line.number, e.kv.value_col,
                         "flag takes exactly one parameter (the ambient dimension)");
      out.push_back(parse_int(e.line.number, tokens[0].second, tokens[0].first,
                              "flag ambient dimension", 2, 4));
      break;
    case ChartKind::BottSamelson:
      if (tokens.empty())
        throw ParseError(e.line.number, e.kv.value_col,
                         "bott_samelson takes the word of simple-root letters");
      if (tokens.size() > 8)
        throw ParseError(e.line.number, e.kv.value_col,
                         "bott_samelson words longer than 8 are not supported");
      for (const auto& [tok, col] : tokens)
        out.push_back(parse_int(e.line.number, col, tok, "simple-root letter", 1, 7));
      break;
  }
  return out;
}

// --------------------------------------------------------------- rendering

std::string render_variety(const Scenario& s) {
  std::string name;
  switch (s.kind) {
    case ChartKind::Projective: name = "projective"; break;
    case ChartKind::Grassmannian: name = "grassmannian"; break;
    case ChartKind::Flag: name = "flag"; break;
    case ChartKind::BottSamelson: name = "bott_samelson"; break;
  }
  name += "(";
  for (size_t i = 0; i < s.parameters.size(); ++i) {
    if (i) name += ",";
    name += std::to_string(s.parameters[i]);
  }
  return name + ")";
}

std::string join_counts(const std::vector<long long>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_point(const std::vector<Scalar>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += render_scalar(v[i]);
  }
  return out + ")";
}

class ReportBuilder {
 public:
  explicit ReportBuilder(bool machine) : machine_(machine) {}

  void header(const Scenario& s) {
    if (machine_) {
      line("schema: 1");
      line("form: " + form_name(s.form));
      line("group: sl" + std::to_string(s.group_n));
      line("variety: " + render_variety(s));
      line("cutoff: " + std::to_string(s.cutoff));
      line("seed: " + std::to_string(s.seed));
    } else {
      line("scenario: " + form_name(s.form) + " sl" + std::to_string(s.group_n) + " on " +
           render_variety(s));
      line("cutoff: " + std::to_string(s.cutoff) + "  seed: " + std::to_string(s.seed));
    }
  }

  void begin(const std::string& task) {
    if (machine_) {
      line("begin " + task);
    } else {
      line("");
      line(task);
    }
  }

  void end(const std::string& task) {
    if (machine_) line("end " + task);
  }

  void kv(const std::string& key, const std::string& value) {
    line((machine_ ? "" : "  ") + key + ": " + value);
  }

  void overall(bool ok) {
    if (!machine_) line("");
    line(std::string("verdict: ") + (ok ? "pass" : "fail"));
  }

  std::string str() const { return out_; }

 private:
  void line(const std::string& l) {
    out_ += l;
    out_ += '\n';
  }

  bool machine_;
  std::string out_;
};

// ------------------------------------------------------------ task runners

void run_present(ReportBuilder& rb, const ZeroScheme& z) {
  Presentation p = presentation(z);
  for (const auto& rel : p.relations) rb.kv("relation", render_poly(rel));
  for (const auto& [name, image] : p.eliminated) rb.kv("eliminated", name + " = " + image);
}

void run_hilbert(ReportBuilder& rb, const ZeroScheme& z, int cutoff) {
  HilbertSeries hs = equivariant_hilbert_series(z, cutoff);
  rb.kv("series", render_series(hs));
  rb.kv("counts", join_counts(series_expand(hs, cutoff)));
}

bool run_fiber_check(ReportBuilder& rb, const ZeroScheme& z, int seed) {
  const Int expected = static_cast<long long>(z.chart.labels.size());
  bool ok = true;
  for (const auto& pt : sample_regular_points(z, 5, seed)) {
    FiberReport rep = fiber_check(z, pt);
    bool good = rep.radical_certified && rep.distinct && *rep.distinct == expected &&
                rep.multiplicity == expected;
    rb.kv("sample", "point=" + join_point(pt) + " multiplicity=" + rep.multiplicity.str() +
                        " distinct=" + (rep.distinct ? rep.distinct->str() : "unknown") +
                        " radical=" + (rep.radical_certified ? "yes" : "no"));
    ok = ok && good;
  }
  FiberReport zero = fiber_check(z, std::vector<Scalar>(z.base_dim(), Scalar(0)));
  rb.kv("zero", "multiplicity=" + zero.multiplicity.str() +
                    " distinct=" + (zero.distinct ? zero.distinct->str() : "unknown"));
  ok = ok && zero.multiplicity == expected && zero.distinct && *zero.distinct == 1;
  rb.kv("verdict", ok ? "pass" : "fail");
  return ok;
}

void run_components(ReportBuilder& rb, const ZeroScheme& z, const ComponentAtlas& atlas) {
  rb.kv("count", std::to_string(atlas.labels.size()));
  for (size_t i = 0; i < atlas.labels.size(); ++i) {
    std::string row = atlas.labels[i].text;
    for (int j = 0; j < z.chart.dim(); ++j)
      row += " | " + z.chart.coordinates[j].name + " = " + render_poly(atlas.params[i][j]);
    rb.kv("component", row);
  }
}

bool run_gkm_compare(ReportBuilder& rb, const ZeroScheme& z, int cutoff) {
  GKMGraph g = gkm_graph(z);
  rb.kv("vertices", std::to_string(g.vertices.size()));
  for (const auto& e : g.edges)
    rb.kv("edge", g.vertices[e.a].text + " -- " + g.vertices[e.b].text + " | " +
                      render_poly(e.character));
  std::vector<long long> gdims = gkm_ring_dims(g, cutoff);
  std::vector<long long> sdims = standard_monomial_counts(z.gb, cutoff);
  rb.kv("gkm-counts", join_counts(gdims));
  rb.kv("scheme-counts", join_counts(sdims));
  bool ok = gdims == sdims;
  rb.kv("verdict", ok ? "pass" : "fail");
  return ok;
}

bool run_weyl_check(ReportBuilder& rb, const ZeroScheme& z, const ComponentAtlas& atlas,
                    int cutoff) {
  WeylAction act = weyl_action(z);
  std::vector<int> all;
  for (size_t i = 0; i < atlas.labels.size(); ++i) all.push_back(static_cast<int>(i));
  std::vector<long long> dims = weyl_invariant_dims(z, atlas, all, cutoff);
  rb.kv("generators", std::to_string(act.label_images.size()));
  rb.kv("invariant-counts", join_counts(dims));
  rb.kv("verdict", "pass");
  return true;
}

void run_restrict(ReportBuilder& rb, const ZeroScheme& z, const ComponentAtlas& atlas,
                  const std::vector<int>& subset, int cutoff) {
  std::string idx, names;
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) {
      idx += " ";
      names += " ";
    }
    idx += std::to_string(subset[i]);
    names += atlas.labels[subset[i]].text;
  }
  rb.kv("labels", idx);
  rb.kv("subset", names);
  rb.kv("counts", join_counts(subalgebra_dims(z, atlas, subset, cutoff)));
}

bool run_localize(ReportBuilder& rb, const ZeroScheme& z, const ComponentAtlas& atlas) {
  LocalizationReport rep = localization_check(z, atlas);
  for (const auto& e : rep.entries)
    rb.kv("entry", e.label + " | k=" + std::to_string(e.k) + " | lhs=" + e.lhs +
                       " | rhs=" + e.rhs + " | " + (e.pass ? "pass" : "fail"));
  rb.kv("verdict", rep.pass ? "pass" : "fail");
  return rep.pass;
}

}  // namespace

std::string task_name(TaskKind t) {
  switch (t) {
    case TaskKind::Present: return "present";
    case TaskKind::Hilbert: return "hilbert";
    case TaskKind::FiberCheck: return "fiber-check";
    case TaskKind::Components: return "components";
    case TaskKind::GkmCompare: return "gkm-compare";
    case TaskKind::WeylCheck: return "weyl-check";
    case TaskKind::Restrict: return "restrict";
    case TaskKind::Localize: return "localize";
  }
  return "unknown";
}

Scenario parse_scenario(const std::string& text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty scenario file; expected `schema: 1`");
  if (lines[0].indent != 0 || lines[0].content != "schema: 1")
    throw ParseError(lines[0].number, 1, "expected `schema: 1` as the first entry");

  std::vector<Section> sections = read_sections(lines, 1);
  size_t si = 0;
  auto need = [&](const char* name) -> const Section& {
    if (si >= sections.size())
      throw ParseError(lines.back().number, 1, std::string("missing `") + name + "` section");
    if (sections[si].name != name)
      throw ParseError(sections[si].header.number, 1,
                       std::string("expected the `") + name + "` section here");
    return sections[si++];
  };
  const Section& group = need("group");
  const Section& variety = need("variety");
  const Section& tasks = need("tasks");
  const Section* options = nullptr;
  if (si < sections.size() && sections[si].name == "options") options = &sections[si++];
  if (si < sections.size())
    throw ParseError(sections[si].header.number, 1,
                     "unknown section `" + sections[si].name + "`");

  Scenario s;

  auto gkeys = read_keys(group, {"family", "n", "form"});
  const Entry& family = require_key(group, gkeys, "family");
  if (family.kv.value != "sl")
    throw ParseError(family.line.number, family.kv.value_col,
                     "only family `sl` is supported");
  const Entry& gn = require_key(group, gkeys, "n");
  s.group_n = parse_int(gn.line.number, gn.kv.value_col, gn.kv.value, "group rank n", 2, 9);
  s.form = parse_form(require_key(group, gkeys, "form"));

  auto vkeys = read_keys(variety, {"kind", "parameters"});
  s.kind = parse_kind(require_key(variety, vkeys, "kind"));
  s.parameters = parse_parameters(s.kind, require_key(variety, vkeys, "parameters"));

  for (const Line& ln : tasks.entries) {
    if (ln.content.rfind("- ", 0) != 0)
      throw ParseError(ln.number, ln.indent + 1, "expected `- <task>` list items");
    std::string item = ln.content.substr(2);
    int item_col = ln.indent + 3;
    size_t colon = item.find(':');
    if (colon == std::string::npos) {
      s.tasks.push_back({parse_task_name(ln, item_col, item), {}});
      continue;
    }
    std::string name = item.substr(0, colon);
    if (name != "restrict")
      throw ParseError(ln.number, item_col, "only the `restrict` task takes arguments");
    if (colon + 2 >= item.size() || item[colon + 1] != ' ')
      throw ParseError(ln.number, item_col + static_cast<int>(colon) + 1,
                       "expected `- restrict: <fixed-point indices>`");
    auto tokens = split_tokens(item.substr(colon + 2),
                               item_col + static_cast<int>(colon) + 2);
    std::vector<int> subset;
    for (const auto& [tok, col] : tokens)
      subset.push_back(parse_int(ln.number, col, tok, "fixed-point index", 0, 9999));
    std::sort(subset.begin(), subset.end());
    for (size_t i = 1; i < subset.size(); ++i)
      if (subset[i] == subset[i - 1])
        throw ParseError(ln.number, item_col,
                         "duplicate fixed-point index " + std::to_string(subset[i]));
    s.tasks.push_back({TaskKind::Restrict, subset});
  }
  if (s.tasks.empty())
    throw ParseError(tasks.header.number, 1, "the tasks section lists no tasks");

  if (options) {
    auto okeys = read_keys(*options, {"cutoff", "seed", "format"});
    if (auto it = okeys.find("cutoff"); it != okeys.end())
      s.cutoff = parse_int(it->second.line.number, it->second.kv.value_col,
                           it->second.kv.value, "cutoff", 1, 64);
    if (auto it = okeys.find("seed"); it != okeys.end())
      s.seed = parse_int(it->second.line.number, it->second.kv.value_col, it->second.kv.value,
                         "seed", 1, 1000000);
    if (auto it = okeys.find("format"); it != okeys.end()) {
      const Entry& e = it->second;
      if (e.kv.value == "machine")
        s.machine = true;
      else if (e.kv.value == "text")
        s.machine = false;
      else
        throw ParseError(e.line.number, e.kv.value_col,
                         "format must be `text` or `machine`");
    }
  }
  return s;
}

Chart scenario_chart(const Scenario& s) {
  switch (s.kind) {
    case ChartKind::Projective: return projective_chart(s.parameters.at(0));
    case ChartKind::Grassmannian:
      return grassmannian_chart(s.parameters.at(0), s.parameters.at(1));
    case ChartKind::Flag: return flag_chart(s.parameters.at(0));
    case ChartKind::BottSamelson: return bott_samelson_chart(s.group_n, s.parameters);
  }
  throw Error("unreachable variety kind");
}

void validate_scenario(const Scenario& s) {
  const std::string n = std::to_string(s.group_n);
  if ((s.form == GroupForm::EmbeddedSl2Borel || s.form == GroupForm::EmbeddedSl2Kostant) &&
      s.group_n != 2)
    throw Error("embedded sl2 forms act through a symmetric power of sl2; set group n to 2");
  if (s.kind == ChartKind::BottSamelson) {
    if (!solvable_form(s.form))
      throw Error("bott-samelson charts require a solvable form (borel)");
    for (int letter : s.parameters)
      if (letter >= s.group_n)
        throw Error("bott-samelson word letter " + std::to_string(letter) +
                    " is not a simple root of sl" + n);
  }
  Chart chart = scenario_chart(s);
  if (s.form == GroupForm::Borel && s.group_n >= 3 && chart.ambient != s.group_n)
    throw Error("borel(sl" + n + ") needs a variety with ambient matrix size " + n);
  if (s.form == GroupForm::Kostant && chart.ambient != s.group_n)
    throw Error("kostant(sl" + n + ") needs a variety with ambient matrix size " + n);

  for (const auto& t : s.tasks) {
    switch (t.kind) {
      case TaskKind::Present:
      case TaskKind::Hilbert:
      case TaskKind::FiberCheck:
        break;
      case TaskKind::Components:
      case TaskKind::Restrict:
        if (!solvable_form(s.form))
          throw Error(task_name(t.kind) +
                      " requires a solvable form (the reductive zero scheme is irreducible)");
        break;
      case TaskKind::WeylCheck:
        if (!solvable_form(s.form)) throw Error("weyl-check requires a solvable form");
        if (s.kind == ChartKind::BottSamelson)
          throw Error("weyl-check is not defined on bott-samelson charts");
        break;
      case TaskKind::GkmCompare:
        if (s.form != GroupForm::Borel || chart.ambient != s.group_n ||
            s.kind == ChartKind::BottSamelson)
          throw Error(
              "gkm-compare needs the full borel torus of the ambient group on a "
              "flag-type variety");
        break;
      case TaskKind::Localize:
        if (!solvable_form(s.form)) throw Error("localize requires a solvable form");
        if (s.kind != ChartKind::Projective && s.kind != ChartKind::Grassmannian)
          throw Error("localize supports projective and grassmannian varieties");
        break;
    }
    if (t.kind == TaskKind::Restrict)
      for (int idx : t.subset)
        if (idx >= static_cast<int>(chart.labels.size()))
          throw Error("restrict index " + std::to_string(idx) + " is out of range; " +
                      render_variety(s) + " has " + std::to_string(chart.labels.size()) +
                      " fixed points");
  }
}

RunResult run_scenario(const Scenario& s) {
  Chart chart = scenario_chart(s);
  ReportBuilder rb(s.machine);
  rb.header(s);

  std::optional<ZeroScheme> z;
  try {
    z.emplace(build_zero_scheme(s.form, s.group_n, chart));
  } catch (const VerificationError& e) {
    rb.begin("build");
    rb.kv("error", e.what());
    rb.kv("verdict", "fail");
    rb.end("build");
    rb.overall(false);
    return {rb.str(), false};
  }

  std::optional<ComponentAtlas> atlas;
  auto get_atlas = [&]() -> const ComponentAtlas& {
    if (!atlas) atlas = components(*z, s.seed);
    return *atlas;
  };

  bool all_ok = true;
  for (const auto& t : s.tasks) {
    const std::string name = task_name(t.kind);
    rb.begin(name);
    try {
      switch (t.kind) {
        case TaskKind::Present: run_present(rb, *z); break;
        case TaskKind::Hilbert: run_hilbert(rb, *z, s.cutoff); break;
        case TaskKind::FiberCheck:
          all_ok = run_fiber_check(rb, *z, s.seed) && all_ok;
          break;
        case TaskKind::Components: run_components(rb, *z, get_atlas()); break;
        case TaskKind::GkmCompare:
          all_ok = run_gkm_compare(rb, *z, s.cutoff) && all_ok;
          break;
        case TaskKind::WeylCheck:
          all_ok = run_weyl_check(rb, *z, get_atlas(), s.cutoff) && all_ok;
          break;
        case TaskKind::Restrict: run_restrict(rb, *z, get_atlas(), t.subset, s.cutoff); break;
        case TaskKind::Localize:
          all_ok = run_localize(rb, *z, get_atlas()) && all_ok;
          break;
      }
    } catch (const VerificationError& e) {
      rb.kv("error", e.what());
      rb.kv("verdict", "fail");
      all_ok = false;
    } catch (const RegularityError& e) {
      rb.kv("error", e.what());
      rb.kv("verdict", "fail");
      all_ok = false;
    }
    rb.end(name);
  }
  rb.overall(all_ok);
  return {rb.str(), all_ok};
}

std::string builtin_catalog() {
  std::ostringstream out;
  out << "schema: 1\n";
  auto row = [&](const std::string& name, const Chart& c) {
    out << "variety: " << name << " | fixed-points: " << c.labels.size() << "\n";
  };
  for (int n = 1; n <= 6; ++n)
    row("projective(" + std::to_string(n) + ")", projective_chart(n));
  row("grassmannian(2,4)", grassmannian_chart(2, 4));
  row("flag(3)", flag_chart(3));
  row("bott_samelson(1)", bott_samelson_chart(3, {1}));
  row("bott_samelson(1,2)", bott_samelson_chart(3, {1, 2}));
  row("bott_samelson(1,2,1)", bott_samelson_chart(3, {1, 2, 1}));
  row("bott_samelson(1,2,1,2)", bott_samelson_chart(3, {1, 2, 1, 2}));
  out << "forms: borel kostant embedded_sl2_borel embedded_sl2_kostant\n";
  out << "tasks: present hilbert fiber-check components gkm-compare weyl-check restrict "
         "localize\n";
  return out.str();
}

}  // namespace equicoh
