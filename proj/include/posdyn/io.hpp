#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "posdyn/census.hpp"
#include "posdyn/nrp.hpp"
#include "posdyn/poset.hpp"
#include "posdyn/search.hpp"
#include "posdyn/tableau.hpp"

namespace posdyn {

using Json = nlohmann::ordered_json;

/// Throws ParseError naming `source` on malformed text.
Json parse_json(std::string_view text, std::string_view source = "<input>");
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// {"n": N, "covers": [[a, b], ...], "name": "..."}; covers are reduced on load.
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);

/// A fixture name (see find_fixture) or a path to a poset JSON file.
Poset load_poset(std::string_view spec);

// {"poset": {...} or "<fixture or file>", "q": Q, "labels": [...]}
Json tableau_to_json(const IncreasingTableau& t);
IncreasingTableau tableau_from_json(const Json& j);
IncreasingTableau load_tableau(const std::string& path);

Json census_to_json(const Census& c);
std::string census_to_text(const Census& c);

Json verdict_to_json(const NrpVerdict& v);
std::string verdict_to_text(const NrpVerdict& v);

Json report_to_json(const SearchReport& r);
SearchReport report_from_json(const Json& j);
std::string report_to_text(const SearchReport& r);

struct DotOptions {
  // Red bottom tree, blue top tree, purple for both, black outside.
  bool color_trees = false;
  const IncreasingTableau* tableau = nullptr;
};

/// DOT digraph of the cover relation with one rank=same group per rank.
std::string export_dot(const Poset& p, const DotOptions& options = {});

}  // namespace posdyn
