#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "posdyn/autonomous.hpp"
#include "posdyn/canonical.hpp"
#include "posdyn/census.hpp"
#include "posdyn/error.hpp"
#include "posdyn/fixtures.hpp"
#include "posdyn/io.hpp"
#include "posdyn/minuscule.hpp"
#include "posdyn/nrp.hpp"
#include "posdyn/orbit.hpp"
#include "posdyn/promotion.hpp"
#include "posdyn/rowmotion.hpp"
#include "posdyn/search.hpp"
#include "posdyn/verify.hpp"

using namespace posdyn;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kUsage = 2;
constexpr int kFalse = 3;

std::string cache_dir() {
  const char* d = std::getenv("POSDYN_CACHE_DIR");
  return d ? d : "";
}

// Exceptional posets are written to the cache directory once and read back
// afterwards.
Poset resolve_poset(const std::string& spec) {
  const auto dir = cache_dir();
  if (!dir.empty() && (spec == "cayley-moufang" || spec == "freudenthal")) {
    const auto path = (fs::path(dir) / (spec + ".json")).string();
    if (fs::exists(path)) return poset_from_json(read_json_file(path)).renamed(spec);
    auto p = load_poset(spec);
    fs::create_directories(dir);
    write_text_file(path, poset_to_json(p).dump() + "\n");
    return p;
  }
  return load_poset(spec);
}

std::vector<Element> parse_elements(const std::string& text) {
  std::vector<Element> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad element index: " + item);
    }
  }
  return out;
}

ElementSet element_set(const Poset& p, const std::string& text) {
  ElementSet s(p.size());
  for (auto x : parse_elements(text)) {
    if (x >= p.size()) throw InvalidArgument("element " + std::to_string(x) + " out of range");
    s.insert(x);
  }
  return s;
}

Json ideal_to_json(const OrderIdeal& i) {
  return {{"poset", poset_to_json(i.poset())}, {"members", i.members().elements()}};
}

std::string ideal_to_text(const OrderIdeal& i) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto x : i.members().elements()) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string poset_summary(const Poset& p) {
  std::ostringstream out;
  const auto& rd = p.rank_data();
  out << (p.name().empty() ? "poset" : p.name()) << ": " << p.size() << " elements, rank " << rd.rank
      << (rd.is_graded ? ", graded" : ", not graded") << (p.is_bounded() ? ", bounded" : "") << "\n";
  out << "covers:";
  for (const auto& c : p.covers()) out << " " << c.lower << "<" << c.upper;
  out << "\ncanonical form: " << canonical_form(p).to_string() << "\n";
  out << "family: " << family_identify(p) << "\n";
  const auto t = trees(p);
  out << "doubletree: " << t.doubletree.count() << " of " << p.size() << " elements\n";
  return out.str();
}

Json poset_show_json(const Poset& p) {
  auto j = poset_to_json(p);
  const auto& rd = p.rank_data();
  j["rank"] = rd.rank;
  j["graded"] = rd.is_graded;
  j["bounded"] = p.is_bounded();
  j["elem_rank"] = rd.elem_rank;
  j["family"] = family_identify(p);
  const auto t = trees(p);
  j["bottom_tree"] = t.bottom_tree.elements();
  j["top_tree"] = t.top_tree.elements();
  j["doubletree"] = t.doubletree.elements();
  return j;
}

void emit(bool text, const Json& j, const std::string& t) {
  if (text)
    std::cout << t;
  else
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rowmotion, K-promotion and NRP verification on finite posets"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  // build
  auto* build = app.add_subcommand("build", "Construct a poset and print it as JSON");
  std::string build_op = "fixture";
  std::vector<std::string> build_args;
  std::string build_subset;
  build->add_option("--op", build_op, "Construction")
      ->check(CLI::IsMember({"fixture", "product", "ordinal-sum", "dual", "ideal-lattice", "dualize"}));
  build->add_option("operands", build_args, "Fixture names or poset files")->required();
  build->add_option("--subset", build_subset, "Autonomous subset for --op dualize, e.g. 1,2,3");

  auto* show = app.add_subcommand("show", "Summarize a poset");
  std::string show_poset;
  show->add_option("poset", show_poset, "Fixture name or poset file")->required();

  auto* promote = app.add_subcommand("promote", "Apply K-promotion");
  std::string promote_file;
  long promote_steps = 1;
  promote->add_option("tableau", promote_file, "Tableau JSON file")->required();
  promote->add_option("--steps", promote_steps, "Number of steps; negative applies the inverse");

  auto* evacuate = app.add_subcommand("evacuate", "Apply K-evacuation");
  std::string evacuate_file;
  long evacuate_steps = 1;
  evacuate->add_option("tableau", evacuate_file, "Tableau JSON file")->required();
  evacuate->add_option("--steps", evacuate_steps, "Number of applications")->check(CLI::NonNegativeNumber);

  auto* rowmo = app.add_subcommand("rowmotion", "Apply rowmotion to an order ideal");
  std::string rowmo_poset, rowmo_ideal;
  long rowmo_steps = 1;
  rowmo->add_option("poset", rowmo_poset, "Fixture name or poset file")->required();
  rowmo->add_option("--ideal", rowmo_ideal, "Members, e.g. 0,1,2 (empty for the empty ideal)");
  rowmo->add_option("--steps", rowmo_steps, "Number of steps; negative applies the inverse");

  auto* orb = app.add_subcommand("orbit", "Orbit of a tableau under K-promotion, or of an ideal under rowmotion");
  std::string orb_input, orb_ideal;
  bool orb_cycle = false, orb_rowmotion = false;
  orb->add_option("input", orb_input, "Tableau JSON file, or a poset with --rowmotion")->required();
  orb->add_flag("--rowmotion", orb_rowmotion, "Treat the input as a poset and walk an ideal");
  orb->add_option("--ideal", orb_ideal, "Ideal members for --rowmotion");
  orb->add_flag("--cycle", orb_cycle, "Print every member");

  auto* census = app.add_subcommand("census", "Orbit-size multiset");
  std::string census_poset;
  std::size_t census_q = 0, census_c = 0;
  bool census_packed = false;
  census->add_option("poset", census_poset, "Fixture name or poset file")->required();
  auto* q_opt = census->add_option("--q", census_q, "K-promotion height");
  auto* c_opt = census->add_option("--c", census_c, "Rowmotion on J(P x c)");
  q_opt->excludes(c_opt);
  census->add_flag("--packed", census_packed, "Only packed tableaux");

  auto* nrp = app.add_subcommand("nrp", "NRP rowmotion");
  nrp->require_subcommand(1);
  auto* check = nrp->add_subcommand("check", "Decide NRP through packed tableaux");
  std::string check_poset;
  bool check_first = false;
  check->add_option("poset", check_poset, "Fixture name or poset file")->required();
  check->add_flag("--first", check_first, "Stop after the first height with a witness");
  auto* search = nrp->add_subcommand("search", "Classify bounded graded posets with NRP rowmotion");
  std::size_t search_max = 0;
  std::string search_resume, search_checkpoint, search_grading = "rank-function";
  bool search_quiet = false;
  search->add_option("--max-n", search_max, "Largest element count")->required()->check(CLI::Range(1, 10));
  search->add_option("--resume", search_resume, "Checkpoint file to resume from and keep updating");
  search->add_option("--checkpoint", search_checkpoint, "Checkpoint file to write");
  search->add_option("--grading", search_grading, "Grading convention")
      ->check(CLI::IsMember({"rank-function", "equal-maximal-chains"}));
  search->add_flag("--quiet", search_quiet, "No progress on standard error");

  auto* exp = app.add_subcommand("export", "Export diagrams");
  exp->require_subcommand(1);
  auto* dot = exp->add_subcommand("dot", "Graphviz DOT of the Hasse diagram");
  std::string dot_poset, dot_tableau;
  bool dot_color = false;
  dot->add_option("poset", dot_poset, "Fixture name or poset file (ignored with --tableau)");
  dot->add_flag("--color", dot_color, "Color bottom tree red, top tree blue, both purple, rest black");
  dot->add_option("--tableau", dot_tableau, "Label nodes by this tableau");

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::string verify_suite;
  bool verify_list = false;
  verify->add_option("suite", verify_suite, "Suite name, or 'all'");
  verify->add_flag("--list", verify_list, "List suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const bool text = format == "text";
  CensusOptions census_options;
  census_options.jobs = jobs;

  try {
    if (build->parsed()) {
      Poset p;
      auto need = [&](std::size_t k) {
        if (build_args.size() != k)
          throw InvalidArgument("--op " + build_op + " takes " + std::to_string(k) + " operand(s)");
      };
      if (build_op == "fixture") {
        need(1);
        p = resolve_poset(build_args[0]);
      } else if (build_op == "product") {
        need(2);
        p = product(resolve_poset(build_args[0]), resolve_poset(build_args[1]));
      } else if (build_op == "ordinal-sum") {
        need(2);
        p = ordinal_sum(resolve_poset(build_args[0]), resolve_poset(build_args[1]));
      } else if (build_op == "dual") {
        need(1);
        p = dual(resolve_poset(build_args[0]));
      } else if (build_op == "ideal-lattice") {
        need(1);
        p = ideal_lattice(resolve_poset(build_args[0]));
      } else {
        need(1);
        auto base = resolve_poset(build_args[0]);
        p = dualize_autonomous(base, element_set(base, build_subset));
      }
      emit(text, poset_to_json(p), poset_summary(p));
      return kOk;
    }
    if (show->parsed()) {
      auto p = resolve_poset(show_poset);
      emit(text, poset_show_json(p), poset_summary(p));
      return kOk;
    }
    if (promote->parsed()) {
      auto t = k_promotion_power(load_tableau(promote_file), promote_steps);
      emit(text, tableau_to_json(t), t.to_string() + "\n");
      return kOk;
    }
    if (evacuate->parsed()) {
      auto t = load_tableau(evacuate_file);
      for (long i = 0; i < evacuate_steps; ++i) t = k_evacuation(t);
      emit(text, tableau_to_json(t), t.to_string() + "\n");
      return kOk;
    }
    if (rowmo->parsed()) {
      auto p = resolve_poset(rowmo_poset);
      OrderIdeal i(p, element_set(p, rowmo_ideal));
      for (long s = 0; s < rowmo_steps; ++s) i = rowmotion(i);
      for (long s = 0; s > rowmo_steps; --s) i = rowmotion_inverse(i);
      emit(text, ideal_to_json(i), ideal_to_text(i) + "\n");
      return kOk;
    }
    if (orb->parsed()) {
      if (orb_rowmotion) {
        auto p = resolve_poset(orb_input);
        auto o = rowmotion_orbit(OrderIdeal(p, element_set(p, orb_ideal)), orb_cycle);
        Json j{{"size", o.size}, {"representative", o.representative.members().elements()}};
        std::string t = "size " + std::to_string(o.size) + ", least " + ideal_to_text(o.representative) + "\n";
        if (orb_cycle) {
          Json cyc = Json::array();
          for (const auto& m : o.cycle) {
            cyc.push_back(m.members().elements());
            t += "  " + ideal_to_text(m) + "\n";
          }
          j["cycle"] = std::move(cyc);
        }
        emit(text, j, t);
      } else {
        auto o = promotion_orbit(load_tableau(orb_input), orb_cycle);
        Json j{{"size", o.size}, {"representative", tableau_to_json(o.representative)}};
        std::string t = "size " + std::to_string(o.size) + ", least " + o.representative.to_string() + "\n";
        if (orb_cycle) {
          Json cyc = Json::array();
          for (const auto& m : o.cycle) {
            cyc.push_back(std::vector<unsigned>(m.labels().begin(), m.labels().end()));
            t += "  " + m.to_string() + "\n";
          }
          j["cycle"] = std::move(cyc);
        }
        emit(text, j, t);
      }
      return kOk;
    }
    if (census->parsed()) {
      auto p = resolve_poset(census_poset);
      if (c_opt->count() == 0 && q_opt->count() == 0) throw InvalidArgument("census needs --q or --c");
      auto c = c_opt->count() ? rowmotion_census(p, census_c)
                              : promotion_census(p, census_q, census_packed, census_options);
      emit(text, census_to_json(c), census_to_text(c));
      return kOk;
    }
    if (check->parsed()) {
      auto p = resolve_poset(check_poset);
      NrpOptions o;
      o.early_exit = check_first;
      o.census = census_options;
      auto v = nrp_check(p, o);
      emit(text, verdict_to_json(v), verdict_to_text(v));
      return v.is_nrp ? kOk : kFalse;
    }
    if (search->parsed()) {
      SearchOptions o;
      o.jobs = jobs;
      o.convention = parse_grading_convention(search_grading);
      if (!search_resume.empty()) {
        o.checkpoint_path = search_resume;
        o.resume = true;
      } else if (!search_checkpoint.empty()) {
        o.checkpoint_path = search_checkpoint;
      } else if (!cache_dir().empty()) {
        fs::create_directories(cache_dir());
        o.checkpoint_path = (fs::path(cache_dir()) / ("nrp-search-" + search_grading + ".json")).string();
      }
      if (!search_quiet) o.progress = [](const std::string& s) { std::cerr << s << "\n"; };
      auto r = nrp_search(search_max, o);
      emit(text, report_to_json(r), report_to_text(r));
      return kOk;
    }
    if (dot->parsed()) {
      std::optional<IncreasingTableau> t;
      if (!dot_tableau.empty()) t = load_tableau(dot_tableau);
      if (!t && dot_poset.empty()) throw InvalidArgument("export dot needs a poset or --tableau");
      auto p = t ? t->poset() : resolve_poset(dot_poset);
      DotOptions o;
      o.color_trees = dot_color;
      o.tableau = t ? &*t : nullptr;
      std::cout << export_dot(p, o);
      return kOk;
    }
    if (verify->parsed()) {
      if (verify_list || verify_suite.empty()) {
        for (const auto& s : verification_suites()) std::cout << s.name << "  " << s.summary << "\n";
        return verify_suite.empty() && !verify_list ? kUsage : kOk;
      }
      VerifyOptions o;
      o.jobs = jobs;
      std::vector<std::string> names;
      if (verify_suite == "all") {
        for (const auto& s : verification_suites())
          if (s.name != "minuscule-nrp-extended") names.push_back(s.name);
      } else {
        names.push_back(verify_suite);
      }
      bool ok = true;
      Json all = Json::array();
      std::string t;
      for (const auto& name : names) {
        auto r = run_suite(name, o);
        ok = ok && r.passed();
        Json checks = Json::array();
        for (const auto& c : r.checks)
          checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        all.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}});
        t += suite_result_to_text(r);
      }
      emit(text, names.size() == 1 ? all[0] : all, t);
      return ok ? kOk : kFalse;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
