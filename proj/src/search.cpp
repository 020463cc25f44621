#include "posdyn/search.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <filesystem>
#include <mutex>
#include <set>
#include <thread>

#include "posdyn/autonomous.hpp"
#include "posdyn/enumerate.hpp"
#include "posdyn/error.hpp"
#include "posdyn/fixtures.hpp"
#include "posdyn/io.hpp"
#include "posdyn/minuscule.hpp"
#include "posdyn/nrp.hpp"

namespace posdyn {

std::string to_string(GradingConvention g) {
  return g == GradingConvention::rank_function ? "rank-function" : "equal-maximal-chains";
}

GradingConvention parse_grading_convention(std::string_view s) {
  if (s == "rank-function") return GradingConvention::rank_function;
  if (s == "equal-maximal-chains") return GradingConvention::equal_maximal_chains;
  throw InvalidArgument("unknown grading convention: " + std::string(s));
}

std::vector<Poset> enumerate_bounded_graded(std::size_t n, GradingConvention g) {
  auto all = enumerate_pure(n, true);
  if (g == GradingConvention::equal_maximal_chains)
    std::erase_if(all, [](const Poset& p) { return !has_equal_maximal_chains(p); });
  return all;
}

std::vector<Poset> autonomous_dualization_class(const Poset& p) {
  std::set<CanonicalForm> seen{canonical_form(p)};
  std::deque<Poset> todo{p};
  while (!todo.empty()) {
    auto cur = todo.front();
    todo.pop_front();
    auto subsets = autonomous_subsets(cur);
    subsets.push_back(ElementSet::full(cur.size()));
    for (const auto& a : subsets) {
      auto next = dualize_autonomous(cur, a);
      if (seen.insert(canonical_form(next)).second) todo.push_back(next);
    }
  }
  std::vector<Poset> out;
  for (const auto& f : seen) out.push_back(f.to_poset());
  return out;
}

namespace {

struct NamedClasses {
  CanonicalForm n, w, w_dual;
  std::set<CanonicalForm> n_family, w_family;
};

const NamedClasses& named_classes() {
  static const NamedClasses c = [] {
    NamedClasses out;
    out.n = canonical_form(n_poset());
    out.w = canonical_form(w_poset());
    out.w_dual = canonical_form(dual(w_poset()));
    for (const auto& q : autonomous_dualization_class(n_poset())) out.n_family.insert(canonical_form(q));
    for (const auto& q : autonomous_dualization_class(w_poset())) out.w_family.insert(canonical_form(q));
    return out;
  }();
  return c;
}

}  // namespace

std::string family_identify(const Poset& p) {
  const auto n = p.size();
  if (n == 0) return "other";
  const auto f = canonical_form(p);
  for (std::size_t a = 1; a * a <= n; ++a)
    if (n % a == 0 && canonical_form(rectangle(a, n / a)) == f)
      return "minuscule: rect:" + std::to_string(a) + "x" + std::to_string(n / a);
  for (std::size_t k = 1; k * (k + 1) / 2 <= n; ++k)
    if (k * (k + 1) / 2 == n && canonical_form(staircase(k)) == f)
      return "minuscule: staircase:" + std::to_string(k);
  if (n >= 4 && n % 2 == 0 && n <= 40 && canonical_form(propeller((n - 4) / 2)) == f)
    return "minuscule: propeller:" + std::to_string((n - 4) / 2);
  if (n == 16 && canonical_form(cayley_moufang()) == f) return "minuscule: cayley-moufang";
  if (n == 27 && canonical_form(freudenthal()) == f) return "minuscule: freudenthal";
  if (n >= 4)
    for (std::size_t a = 0; a + 4 <= n; ++a)
      if (canonical_form(p_ab(a, n - 4 - a)) == f)
        return "P_{" + std::to_string(a) + "," + std::to_string(n - 4 - a) + "}";
  if (n == 9) {
    const auto& c = named_classes();
    if (f == c.n) return "N";
    if (c.n_family.count(f)) return "N-family";
    if (f == c.w) return "W";
    if (f == c.w_dual) return "dual(W)";
    if (c.w_family.count(f)) return "W-family";
  }
  return "other";
}

namespace {

struct Checkpoint {
  SearchReport done;
  std::size_t partial_n = 0;
  std::size_t next = 0;
  std::vector<std::size_t> kept;
};

Json checkpoint_to_json(const Checkpoint& c) {
  Json j;
  j["report"] = report_to_json(c.done);
  j["partial"] = {{"n", c.partial_n}, {"next", c.next}, {"kept", c.kept}};
  return j;
}

Checkpoint checkpoint_from_json(const Json& j) {
  Checkpoint c;
  c.done = report_from_json(j.at("report"));
  const auto& p = j.at("partial");
  c.partial_n = p.at("n").get<std::size_t>();
  c.next = p.at("next").get<std::size_t>();
  c.kept = p.at("kept").get<std::vector<std::size_t>>();
  return c;
}

void decide_range(const std::vector<Poset>& cands, std::size_t begin, std::size_t end,
                  unsigned jobs, std::vector<char>& keep) {
  std::atomic<std::size_t> next{begin};
  std::exception_ptr failure;
  std::mutex mu;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < end; i = next++) keep[i] = nrp_decide(cands[i]) ? 1 : 0;
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      next = end;
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(end - begin)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

SearchReport nrp_search(std::size_t max_n, const SearchOptions& options) {
  if (max_n > 10) throw InvalidArgument("nrp_search supports at most 10 elements");
  Checkpoint cp;
  cp.done.max_n = max_n;
  cp.done.convention = options.convention;
  if (options.resume && !options.checkpoint_path.empty() &&
      std::filesystem::exists(options.checkpoint_path)) {
    auto loaded = checkpoint_from_json(read_json_file(options.checkpoint_path));
    if (loaded.done.convention != options.convention)
      throw InvalidArgument("checkpoint was written under a different grading convention");
    std::erase_if(loaded.done.levels, [&](const SearchLevel& l) { return l.n > max_n; });
    loaded.done.max_n = max_n;
    cp = std::move(loaded);
  }
  auto save = [&] {
    if (!options.checkpoint_path.empty())
      write_text_file(options.checkpoint_path, checkpoint_to_json(cp).dump(1) + "\n");
  };

  for (std::size_t n = cp.done.levels.size() + 1; n <= max_n; ++n) {
    const auto cands = enumerate_bounded_graded(n, options.convention);
    std::vector<char> keep(cands.size(), 0);
    std::size_t next = 0;
    if (cp.partial_n == n) {
      next = std::min(cp.next, cands.size());
      for (auto i : cp.kept)
        if (i < keep.size()) keep[i] = 1;
    }
    cp.partial_n = n;
    while (next < cands.size()) {
      const auto end = std::min(cands.size(), next + std::max<std::size_t>(1, options.chunk));
      decide_range(cands, next, end, options.jobs, keep);
      next = end;
      cp.next = next;
      cp.kept.clear();
      for (std::size_t i = 0; i < next; ++i)
        if (keep[i]) cp.kept.push_back(i);
      save();
      if (options.progress)
        options.progress("n = " + std::to_string(n) + ": " + std::to_string(next) + " / " +
                         std::to_string(cands.size()));
    }
    SearchLevel level{n, cands.size(), {}};
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (keep[i]) level.survivors.push_back({canonical_form(cands[i]), family_identify(cands[i])});
    std::sort(level.survivors.begin(), level.survivors.end(),
              [](const Survivor& a, const Survivor& b) { return a.form < b.form; });
    cp.done.levels.push_back(std::move(level));
    cp.partial_n = 0;
    cp.next = 0;
    cp.kept.clear();
    save();
  }
  return cp.done;
}

}  // namespace posdyn
