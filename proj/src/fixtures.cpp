#include "posdyn/fixtures.hpp"

#include <charconv>

#include "posdyn/minuscule.hpp"

namespace posdyn {

Poset bee_hummingbird() {
  // Read off the hummingbird Hasse diagram, bottom to top, left to right.
  static const std::vector<Cover> covers{{0, 1}, {1, 2}, {1, 4}, {2, 3}, {2, 5}, {4, 5},
                                         {4, 7}, {3, 6}, {5, 6}, {5, 8}, {5, 9}, {7, 8}};
  return Poset::from_relations(10, covers, "bee-hummingbird");
}

Poset n_prime() {
  return ordinal_sum(ordinal_sum(chain(1), antichain(3)), chain(1)).renamed("n-prime");
}

Poset n_poset() { return ordinal_sum(n_prime(), chain(4)).renamed("n"); }

Poset w_poset() {
  // Read off the Hasse diagram of W.
  static const std::vector<Cover> covers{{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
                                         {4, 5}, {3, 6}, {3, 7}, {5, 6}, {6, 8}, {7, 8}};
  return Poset::from_relations(9, covers, "w");
}

Poset cube() { return product(rectangle(2, 2), chain(2)).renamed("cube"); }

Poset p_ab(std::size_t a, std::size_t b) {
  Poset p = rectangle(2, 2);
  if (a) p = ordinal_sum(chain(a), p);
  if (b) p = ordinal_sum(p, chain(b));
  return p.renamed("p:" + std::to_string(a) + "," + std::to_string(b));
}

IncreasingTableau hummingbird_step_input() {
  return IncreasingTableau(bee_hummingbird(), 8, {1, 2, 3, 5, 4, 5, 7, 7, 8, 6});
}

IncreasingTableau hummingbird_step_output() {
  return IncreasingTableau(bee_hummingbird(), 8, {1, 2, 4, 6, 3, 5, 8, 6, 7, 8});
}

IncreasingTableau cube_witness_tableau() {
  // Element (p, j) sits at 2p + j. Bottom 1; atoms 1, 2, 4 get 2, 3, 4; the
  // coatom 6 above atoms 2 and 4 gets 6, coatoms 3 and 5 get 5; top 7.
  return IncreasingTableau(cube(), 7, {1, 2, 3, 5, 4, 5, 6, 7});
}

namespace {

std::optional<std::size_t> to_count(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Fixture> find_fixture(std::string_view name) {
  if (name == "bee-hummingbird")
    return Fixture{"bee-hummingbird", bee_hummingbird(), "cover list read from the hummingbird diagram"};
  if (name == "n-prime") return Fixture{"n-prime", n_prime(), "1 + 3-antichain + 1"};
  if (name == "n") return Fixture{"n", n_poset(), "n-prime + chain 4"};
  if (name == "w") return Fixture{"w", w_poset(), "cover list read from the W diagram"};
  if (name == "w-dual") return Fixture{"w-dual", dual(w_poset()).renamed("w-dual"), "dual of W"};
  if (name == "cube") return Fixture{"cube", cube(), "(2 x 2) x 2"};
  if (auto spec = MinusculeSpec::parse(name))
    return Fixture{spec->cli_name(), minuscule(*spec), "minuscule family member"};
  auto colon = name.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto head = name.substr(0, colon), tail = name.substr(colon + 1);
  if (head == "chain" || head == "antichain") {
    auto k = to_count(tail);
    if (!k || *k == 0) return std::nullopt;
    auto p = head == "chain" ? chain(*k) : antichain(*k);
    return Fixture{std::string(name), p.renamed(std::string(name)), std::string(head)};
  }
  if (head == "p") {
    auto comma = tail.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto a = to_count(tail.substr(0, comma)), b = to_count(tail.substr(comma + 1));
    if (!a || !b) return std::nullopt;
    return Fixture{std::string(name), p_ab(*a, *b), "a + (2 x 2) + b"};
  }
  return std::nullopt;
}

std::vector<std::string> fixture_names() {
  return {"bee-hummingbird", "n-prime", "n",           "w",           "w-dual",
          "cube",            "chain:N", "antichain:N", "p:A,B",       "rect:AxB",
          "staircase:N",     "propeller:K", "cayley-moufang", "freudenthal"};
}

}  // namespace posdyn
