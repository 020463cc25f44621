#include "posdyn/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace posdyn {

namespace {

std::vector<std::size_t> refine_colors(const Poset& p) {
  const auto n = p.size();
  const auto& rk = p.rank_data().elem_rank;
  using Key = std::vector<std::size_t>;
  std::vector<std::size_t> color(n);
  {
    std::vector<Key> keys(n);
    for (std::size_t x = 0; x < n; ++x) {
      keys[x] = {rk[x], p.lower_covers(x).size(), p.upper_covers(x).size(),
                 p.down_set(x).count(), p.up_set(x).count()};
    }
    std::map<Key, std::size_t> ids;
    for (auto& k : keys) ids.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t x = 0; x < n; ++x) color[x] = ids[keys[x]];
  }
  std::size_t classes = 0;
  while (true) {
    std::vector<Key> keys(n);
    for (std::size_t x = 0; x < n; ++x) {
      Key lo, hi;
      for (auto y : p.lower_covers(x)) lo.push_back(color[y]);
      for (auto y : p.upper_covers(x)) hi.push_back(color[y]);
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      Key k{color[x], lo.size()};
      k.insert(k.end(), lo.begin(), lo.end());
      k.insert(k.end(), hi.begin(), hi.end());
      keys[x] = std::move(k);
    }
    std::map<Key, std::size_t> ids;
    for (auto& k : keys) ids.emplace(k, 0);
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t x = 0; x < n; ++x) color[x] = ids[keys[x]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return color;
}

class Canonizer {
 public:
  explicit Canonizer(const Poset& p) : p_(p), n_(p.size()) {
    color_ = refine_colors(p);
    target_ = color_;
    std::sort(target_.begin(), target_.end());
    // Twins: identical strict down- and up-sets, so swapping them is an automorphism.
    twin_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      twin_[x] = x;
      for (std::size_t y = 0; y < x; ++y) {
        if (twin_[y] != y || color_[y] != color_[x]) continue;
        auto dx = p.down_set(x), dy = p.down_set(y), ux = p.up_set(x), uy = p.up_set(y);
        dx.erase(x), dy.erase(y), ux.erase(x), uy.erase(y);
        if (dx == dy && ux == uy) {
          twin_[x] = y;
          break;
        }
      }
    }
    cover_.assign(n_ * n_, 0);
    for (const auto& c : p.covers()) cover_[c.lower * n_ + c.upper] = 1;
    order_.assign(n_, 0);
    used_.assign(n_, false);
    code_.assign(n_ * (n_ > 0 ? n_ - 1 : 0), 0);
  }

  Canonization run() {
    search(0, true);
    Canonization out;
    out.relabeling.assign(n_, 0);
    for (std::size_t k = 0; k < n_; ++k) out.relabeling[best_order_[k]] = k;
    out.form.n = n_;
    for (const auto& c : p_.covers())
      out.form.covers.push_back({out.relabeling[c.lower], out.relabeling[c.upper]});
    std::sort(out.form.covers.begin(), out.form.covers.end());
    return out;
  }

 private:
  // Code chunk for position k: for each j < k, the bits cover(j,k), cover(k,j).
  std::size_t chunk_begin(std::size_t k) const { return k * (k - 1); }

  void search(std::size_t k, bool equal_prefix) {
    if (k == n_) {
      if (!have_best_ || !equal_prefix) {
        best_code_ = code_;
        best_order_ = order_;
        have_best_ = true;
        ++best_version_;
      }
      return;
    }
    std::vector<bool> tried_twin(n_, false);
    for (std::size_t x = 0; x < n_; ++x) {
      if (used_[x] || color_[x] != target_[k]) continue;
      if (tried_twin[twin_[x]]) continue;
      tried_twin[twin_[x]] = true;

      order_[k] = x;
      const auto base = chunk_begin(k);
      for (std::size_t j = 0; j < k; ++j) {
        code_[base + 2 * j] = cover_[order_[j] * n_ + x];
        code_[base + 2 * j + 1] = cover_[x * n_ + order_[j]];
      }
      bool child_equal = false;
      if (have_best_ && equal_prefix) {
        int cmp = 0;
        for (std::size_t i = base; i < base + 2 * k && cmp == 0; ++i) {
          if (code_[i] != best_code_[i]) cmp = code_[i] < best_code_[i] ? -1 : 1;
        }
        if (cmp > 0) continue;
        child_equal = cmp == 0;
      }
      used_[x] = true;
      const auto version = best_version_;
      search(k + 1, child_equal);
      used_[x] = false;
      // A new best found below shares our prefix.
      if (best_version_ != version) equal_prefix = true;
    }
  }

  const Poset& p_;
  std::size_t n_;
  std::vector<std::size_t> color_, target_, twin_;
  std::vector<unsigned char> cover_;
  std::vector<Element> order_, best_order_;
  std::vector<bool> used_;
  std::vector<unsigned char> code_, best_code_;
  bool have_best_ = false;
  std::size_t best_version_ = 0;
};

}  // namespace

Poset CanonicalForm::to_poset() const { return Poset::from_relations(n, covers); }

std::string CanonicalForm::to_string() const {
  std::ostringstream out;
  out << n << ':';
  for (std::size_t i = 0; i < covers.size(); ++i)
    out << (i ? "," : "") << covers[i].lower << '<' << covers[i].upper;
  return out.str();
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const {
  std::size_t h = f.n * 0x9e3779b97f4a7c15ull;
  for (const auto& c : f.covers) {
    h ^= (c.lower * 131 + c.upper) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Canonization canonize(const Poset& p) { return Canonizer(p).run(); }

CanonicalForm canonical_form(const Poset& p) { return canonize(p).form; }

bool is_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace posdyn
