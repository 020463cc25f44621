#include "posdyn/io.hpp"

#include <fstream>
#include <sstream>

#include "posdyn/error.hpp"
#include "posdyn/fixtures.hpp"
#include "posdyn/minuscule.hpp"

namespace posdyn {

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(source) + ": malformed JSON: " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  const auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out << text;
    if (!out) throw Error("failed writing " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot move " + tmp + " to " + path);
}

namespace {

std::size_t get_count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

}  // namespace

Json poset_to_json(const Poset& p) {
  Json j;
  j["n"] = p.size();
  Json covers = Json::array();
  for (const auto& c : p.covers()) covers.push_back({c.lower, c.upper});
  j["covers"] = std::move(covers);
  if (!p.name().empty()) j["name"] = p.name();
  return j;
}

Poset poset_from_json(const Json& j) {
  const auto n = get_count(member(j, "n", "poset"), "poset.n");
  const auto& covers = member(j, "covers", "poset");
  if (!covers.is_array()) throw ParseError("poset.covers: expected an array");
  std::vector<Cover> rel;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto where = "poset.covers[" + std::to_string(i) + "]";
    const auto& pair = covers[i];
    if (!pair.is_array() || pair.size() != 2) throw ParseError(where + ": expected [a, b]");
    rel.push_back({get_count(pair[0], where + "[0]"), get_count(pair[1], where + "[1]")});
  }
  std::string name;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw ParseError("poset.name: expected a string");
    name = it->get<std::string>();
  }
  return Poset::from_relations(n, rel, name);
}

Poset load_poset(std::string_view spec) {
  if (auto f = find_fixture(spec)) return f->poset;
  return poset_from_json(read_json_file(std::string(spec)));
}

Json tableau_to_json(const IncreasingTableau& t) {
  Json j;
  j["poset"] = poset_to_json(t.poset());
  j["q"] = t.height();
  j["labels"] = Json(std::vector<unsigned>(t.labels().begin(), t.labels().end()));
  return j;
}

IncreasingTableau tableau_from_json(const Json& j) {
  const auto& pj = member(j, "poset", "tableau");
  Poset p = pj.is_string() ? load_poset(pj.get<std::string>()) : poset_from_json(pj);
  const auto q = get_count(member(j, "q", "tableau"), "tableau.q");
  if (q > 65535) throw ParseError("tableau.q: too large");
  const auto& lj = member(j, "labels", "tableau");
  if (!lj.is_array()) throw ParseError("tableau.labels: expected an array");
  std::vector<Label> labels;
  for (std::size_t i = 0; i < lj.size(); ++i) {
    const auto v = get_count(lj[i], "tableau.labels[" + std::to_string(i) + "]");
    if (v > 65535) throw ParseError("tableau.labels[" + std::to_string(i) + "]: too large");
    labels.push_back(static_cast<Label>(v));
  }
  return IncreasingTableau(std::move(p), q, std::move(labels));
}

IncreasingTableau load_tableau(const std::string& path) { return tableau_from_json(read_json_file(path)); }

Json census_to_json(const Census& c) {
  Json j;
  j["poset"] = poset_to_json(c.poset);
  j["kind"] = c.kind == CensusKind::promotion ? "promotion" : "rowmotion";
  j[c.kind == CensusKind::promotion ? "q" : "c"] = c.parameter;
  j["packed_only"] = c.packed_only;
  Json orbits = Json::array();
  for (const auto& [size, count] : c.orbits) orbits.push_back({{"size", size}, {"count", count}});
  j["orbits"] = std::move(orbits);
  j["orbit_count"] = c.orbit_count();
  j["total_states"] = c.total_states;
  return j;
}

std::string census_to_text(const Census& c) {
  std::ostringstream out;
  out << (c.kind == CensusKind::promotion ? "K-promotion" : "rowmotion") << " census of "
      << (c.poset.name().empty() ? "poset" : c.poset.name()) << ", "
      << (c.kind == CensusKind::promotion ? "q = " : "c = ") << c.parameter
      << (c.packed_only ? ", packed" : "") << "\n";
  out << "  size  orbits\n";
  for (const auto& [size, count] : c.orbits) {
    out.width(6);
    out << size << "  " << count << "\n";
  }
  out << "  " << c.orbit_count() << " orbits, " << c.total_states << " states\n";
  return out.str();
}

Json verdict_to_json(const NrpVerdict& v) {
  Json j;
  j["is_nrp"] = v.is_nrp;
  j["vacuous"] = v.vacuous;
  j["q_range"] = {v.q_min, v.q_max};
  Json w = Json::array();
  for (const auto& x : v.witnesses)
    w.push_back({{"q", x.q}, {"orbit_size", x.orbit_size}, {"tableau", tableau_to_json(x.representative)}});
  j["witnesses"] = std::move(w);
  return j;
}

std::string verdict_to_text(const NrpVerdict& v) {
  std::ostringstream out;
  out << (v.is_nrp ? "NRP" : "not NRP");
  if (v.vacuous) out << " (vacuous: no height in range)";
  out << "; heights " << v.q_min << ".." << v.q_max << "\n";
  for (const auto& w : v.witnesses)
    out << "  q = " << w.q << ", orbit size " << w.orbit_size << ": " << w.representative.to_string()
        << "\n";
  return out.str();
}

namespace {

Json form_to_json(const CanonicalForm& f) {
  Json covers = Json::array();
  for (const auto& c : f.covers) covers.push_back({c.lower, c.upper});
  return {{"n", f.n}, {"covers", std::move(covers)}};
}

CanonicalForm form_from_json(const Json& j) {
  CanonicalForm f;
  f.n = get_count(member(j, "n", "form"), "form.n");
  for (const auto& c : member(j, "covers", "form"))
    f.covers.push_back({get_count(c.at(0), "cover"), get_count(c.at(1), "cover")});
  return f;
}

}  // namespace

Json report_to_json(const SearchReport& r) {
  Json j;
  j["max_n"] = r.max_n;
  j["grading_convention"] = to_string(r.convention);
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json s = Json::array();
    for (const auto& v : l.survivors) {
      auto f = form_to_json(v.form);
      f["family"] = v.family;
      s.push_back(std::move(f));
    }
    levels.push_back({{"n", l.n},
                      {"examined", l.examined},
                      {"survivor_count", l.survivors.size()},
                      {"survivors", std::move(s)}});
  }
  j["levels"] = std::move(levels);
  return j;
}

SearchReport report_from_json(const Json& j) {
  SearchReport r;
  r.max_n = get_count(member(j, "max_n", "report"), "report.max_n");
  r.convention = parse_grading_convention(member(j, "grading_convention", "report").get<std::string>());
  for (const auto& l : member(j, "levels", "report")) {
    SearchLevel level;
    level.n = get_count(member(l, "n", "level"), "level.n");
    level.examined = get_count(member(l, "examined", "level"), "level.examined");
    for (const auto& s : member(l, "survivors", "level"))
      level.survivors.push_back({form_from_json(s), member(s, "family", "survivor").get<std::string>()});
    r.levels.push_back(std::move(level));
  }
  return r;
}

std::string report_to_text(const SearchReport& r) {
  std::ostringstream out;
  out << "bounded graded posets with NRP rowmotion, n <= " << r.max_n << " (grading: "
      << to_string(r.convention) << ")\n";
  for (const auto& l : r.levels) {
    out << "n = " << l.n << ": " << l.survivors.size() << " of " << l.examined << "\n";
    for (const auto& s : l.survivors) out << "  " << s.family << "  " << s.form.to_string() << "\n";
  }
  return out.str();
}

std::string export_dot(const Poset& p, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph \"" << (p.name().empty() ? "poset" : p.name()) << "\" {\n";
  out << "  rankdir=BT;\n  node [shape=circle];\n";
  const auto& rd = p.rank_data();
  std::vector<std::vector<Element>> by_rank(rd.rank + 1);
  for (std::size_t x = 0; x < p.size(); ++x) by_rank[rd.elem_rank[x]].push_back(x);
  for (const auto& level : by_rank) {
    out << "  { rank=same;";
    for (auto x : level) out << " " << x << ";";
    out << " }\n";
  }
  std::optional<TreeDecomposition> t;
  if (options.color_trees) t = trees(p);
  for (std::size_t x = 0; x < p.size(); ++x) {
    out << "  " << x << " [label=\"";
    if (options.tableau)
      out << (*options.tableau)[x];
    else
      out << x;
    out << "\"";
    if (t) {
      const bool b = t->bottom_tree.contains(x), u = t->top_tree.contains(x);
      const char* color = b && u ? "purple" : b ? "red" : u ? "blue" : "black";
      out << " style=filled fillcolor=" << color << " fontcolor=white";
    }
    out << "];\n";
  }
  for (const auto& c : p.covers()) out << "  " << c.lower << " -> " << c.upper << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace posdyn
