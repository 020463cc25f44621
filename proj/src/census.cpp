#include "posdyn/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>

#include "posdyn/enumerate.hpp"
#include "posdyn/error.hpp"
#include "posdyn/promotion.hpp"
#include "posdyn/rowmotion.hpp"

namespace posdyn {

std::uint64_t Census::orbit_count() const {
  std::uint64_t c = 0;
  for (const auto& [size, count] : orbits) c += count;
  return c;
}

std::uint64_t Census::weighted_total() const {
  std::uint64_t c = 0;
  for (const auto& [size, count] : orbits) c += size * count;
  return c;
}

namespace {

std::string key_of(std::span<const Label> labels) {
  return std::string(reinterpret_cast<const char*>(labels.data()), labels.size() * sizeof(Label));
}

bool lex_less(std::span<const Label> a, std::span<const Label> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class OrbitWalker {
 public:
  OrbitWalker(const Poset& p, std::size_t q, bool packed, std::size_t cap)
      : engine_(p), q_(q), packed_(packed), cap_(cap), seen_(q + 1, 0) {}

  // Size of the orbit of `seed`, or 0 when `abort_if_smaller` is set and a
  // member below the seed shows up. Fills `rep` with the least member.
  std::size_t walk(std::span<const Label> seed, bool abort_if_smaller, std::vector<Label>& rep,
                   std::vector<std::string>* keys) {
    cur_.assign(seed.begin(), seed.end());
    rep = cur_;
    std::size_t size = 0;
    do {
      if (++size > cap_) throw CapExceeded("orbit exceeds " + std::to_string(cap_) + " steps");
      if (keys) keys->push_back(key_of(cur_));
      engine_.promote(cur_, q_);
      if (packed_) check_packed();
      if (lex_less(cur_, rep)) {
        if (abort_if_smaller) return 0;
        rep = cur_;
      }
    } while (!std::equal(cur_.begin(), cur_.end(), seed.begin()));
    return size;
  }

 private:
  void check_packed() {
    if (++epoch_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0u);
      epoch_ = 1;
    }
    std::size_t distinct = 0;
    for (auto l : cur_) {
      if (seen_[l] != epoch_) {
        seen_[l] = epoch_;
        ++distinct;
      }
    }
    if (distinct != q_) throw InternalError("K-promotion left the packed tableaux");
  }

  PromotionEngine engine_;
  std::size_t q_;
  bool packed_;
  std::size_t cap_;
  std::vector<unsigned> seen_;
  unsigned epoch_ = 0;
  std::vector<Label> cur_;
};

bool walk_serial(const Poset& p, std::size_t q, bool packed_only, const CensusOptions& options,
                 const OrbitVisitor& visit, std::uint64_t* states) {
  OrbitWalker walker(p, q, packed_only, options.orbit_cap);
  std::unordered_set<std::string> visited;
  bool seed_filter = options.memory_cap == 0;
  std::vector<Label> rep;
  std::vector<std::string> keys;
  std::uint64_t seen = 0;
  const bool finished = for_each_increasing(p, q, packed_only, [&](std::span<const Label> seed) {
    ++seen;
    if (!visited.empty() && visited.count(key_of(seed))) return true;
    if (seed_filter) {
      const auto size = walker.walk(seed, true, rep, nullptr);
      return size == 0 || visit(seed, size);
    }
    keys.clear();
    const auto size = walker.walk(seed, false, rep, &keys);
    for (auto& k : keys) visited.insert(std::move(k));
    if (visited.size() > options.memory_cap) seed_filter = true;
    return visit(rep, size);
  });
  if (states) *states = seen;
  return finished;
}

bool walk_parallel(const Poset& p, std::size_t q, bool packed_only, const CensusOptions& options,
                   const OrbitVisitor& visit, std::uint64_t* states) {
  const unsigned jobs = options.jobs;
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::exception_ptr failure;
  std::uint64_t seen_total = 0;
  auto work = [&](unsigned tid) {
    try {
      OrbitWalker walker(p, q, packed_only, options.orbit_cap);
      std::vector<Label> rep;
      std::uint64_t index = 0;
      for_each_increasing(p, q, packed_only, [&](std::span<const Label> seed) {
        if (stop.load(std::memory_order_relaxed)) return false;
        if (index++ % jobs != tid) return true;
        const auto size = walker.walk(seed, true, rep, nullptr);
        if (size == 0) return true;
        std::lock_guard lock(mu);
        if (stop.load()) return false;
        if (!visit(seed, size)) {
          stop = true;
          return false;
        }
        return true;
      });
      if (tid == 0) seen_total = index;
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  if (states) *states = seen_total;
  return !stop.load();
}

}  // namespace

bool for_each_promotion_orbit(const Poset& p, std::size_t q, bool packed_only,
                              const CensusOptions& options, const OrbitVisitor& visit) {
  return options.jobs > 1 ? walk_parallel(p, q, packed_only, options, visit, nullptr)
                          : walk_serial(p, q, packed_only, options, visit, nullptr);
}

Census promotion_census(const Poset& p, std::size_t q, bool packed_only,
                        const CensusOptions& options) {
  Census c{p, CensusKind::promotion, q, packed_only, {}, 0};
  auto visit = [&](std::span<const Label>, std::size_t size) {
    ++c.orbits[size];
    return true;
  };
  if (options.jobs > 1)
    walk_parallel(p, q, packed_only, options, visit, &c.total_states);
  else
    walk_serial(p, q, packed_only, options, visit, &c.total_states);
  if (c.weighted_total() != c.total_states)
    throw InternalError("census orbit sizes do not add up to the state count");
  return c;
}

Census rowmotion_census(const Poset& p, std::size_t c, std::size_t ideal_cap) {
  if (c == 0) throw InvalidArgument("rowmotion census needs c >= 1");
  const auto pc = product(p, chain(c));
  Census out{p, CensusKind::rowmotion, c, false, {}, 0};
  RowmotionStep step(pc);
  std::unordered_set<ElementSet, ElementSetHash> visited;
  for_each_ideal(
      pc,
      [&](const ElementSet& seed) {
        ++out.total_states;
        if (visited.count(seed)) return true;
        std::size_t size = 0;
        ElementSet cur = seed;
        do {
          visited.insert(cur);
          ++size;
          cur = step(cur);
        } while (!(cur == seed));
        ++out.orbits[size];
        return true;
      },
      ideal_cap);
  if (out.weighted_total() != out.total_states)
    throw InternalError("rowmotion orbits do not add up to the ideal count");
  return out;
}

}  // namespace posdyn
