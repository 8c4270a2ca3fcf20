#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "incalg/demos.hpp"

using namespace incalg;

namespace {

std::vector<std::pair<std::string, std::string>> labelled(const Poset& P, const std::vector<Pair>& pairs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : pairs) out.emplace_back(P.label(a), P.label(b));
  return out;
}

/// All permutations satisfying the order condition, by brute force.
std::vector<std::vector<std::uint32_t>> brute_order_maps(const Poset& P, bool reverse) {
  std::vector<std::uint32_t> perm(P.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    bool ok = true;
    for (std::uint32_t x = 0; x < P.size() && ok; ++x)
      for (std::uint32_t y = 0; y < P.size() && ok; ++y)
        ok = P.leq(x, y) == (reverse ? P.leq(perm[y], perm[x]) : P.leq(perm[x], perm[y]));
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Poset> sample_posets() {
  return {Poset::chain(1),
          Poset::chain(2),
          Poset::chain(4),
          Poset::antichain(3),
          example_poset(),
          Poset::from_relations({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}}),
          Poset::from_relations({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}}),
          Poset::from_relations({"1", "2", "3", "4", "5"}, {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}, {"4", "5"}})};
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("2-chain from relations") {
    const Poset P = Poset::from_relations({"1", "2"}, {{"1", "2"}});
    CHECK(labelled(P, P.strict_pairs()) == std::vector<std::pair<std::string, std::string>>{{"1", "2"}});
    CHECK(P == Poset::chain(2));
  }

  TEST_CASE("four-element poset strict pairs") {
    const Poset P = example_poset();
    CHECK(labelled(P, P.strict_pairs()) ==
          std::vector<std::pair<std::string, std::string>>{{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}});
    CHECK(labelled(P, P.hasse_edges()) ==
          std::vector<std::pair<std::string, std::string>>{{"1", "2"}, {"1", "4"}, {"2", "3"}});
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Poset::from_relations({"1", "2"}, {{"1", "2"}, {"2", "1"}}), CycleError);
    CHECK_THROWS_AS(Poset::from_relations({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3", "1"}}), CycleError);
    CHECK_THROWS_AS(Poset::from_relations({"1", "2"}, {{"1", "7"}}), UnknownLabel);
    CHECK_THROWS_AS(Poset::from_relations({"1", "1"}, {}), ParseError);
  }

  TEST_CASE("labels are renumbered along a linear extension") {
    const Poset P = Poset::from_relations({"top", "bottom"}, {{"bottom", "top"}});
    CHECK(P.label(0) == "bottom");
    for (std::uint32_t x = 0; x < P.size(); ++x)
      for (std::uint32_t y = 0; y < P.size(); ++y)
        if (P.leq(x, y)) CHECK(x <= y);
  }

  TEST_CASE("connectivity") {
    CHECK(is_connected(Poset::chain(2)));
    CHECK_FALSE(is_connected(Poset::antichain(2)));
    CHECK(is_connected(example_poset()));
    CHECK_THROWS_AS(is_connected(Poset::antichain(0)), EmptyPoset);
    CHECK_FALSE(is_connected(Poset::from_relations({"1", "2", "3", "4"}, {{"1", "2"}, {"3", "4"}})));
  }

  TEST_CASE("order maps of the 2-chain") {
    const auto maps = enumerate_order_maps(Poset::chain(2));
    REQUIRE(maps.size() == 2);
    CHECK(maps[0].mapping == std::vector<std::uint32_t>{0, 1});
    CHECK(maps[0].kind == OrderMap::Kind::automorphism);
    CHECK(maps[1].mapping == std::vector<std::uint32_t>{1, 0});
    CHECK(maps[1].kind == OrderMap::Kind::anti_automorphism);
  }

  TEST_CASE("order maps of a 2-antichain are listed under both kinds") {
    const auto maps = enumerate_order_maps(Poset::antichain(2));
    REQUIRE(maps.size() == 4);
    int autos = 0, antis = 0;
    for (const auto& m : maps) (m.kind == OrderMap::Kind::automorphism ? autos : antis)++;
    CHECK(autos == 2);
    CHECK(antis == 2);
  }

  TEST_CASE("order maps agree with brute force over all permutations") {
    for (const Poset& P : sample_posets()) {
      const auto maps = enumerate_order_maps(P);
      std::vector<std::vector<std::uint32_t>> autos, antis;
      for (const auto& m : maps) (m.kind == OrderMap::Kind::automorphism ? autos : antis).push_back(m.mapping);
      CHECK(autos == brute_order_maps(P, false));
      CHECK(antis == brute_order_maps(P, true));
    }
    // The four-element poset: 24 permutations filtered by hand give only the identity.
    std::size_t autos = 0;
    for (const auto& m : enumerate_order_maps(example_poset())) autos += m.kind == OrderMap::Kind::automorphism;
    CHECK(autos == brute_order_maps(example_poset(), false).size());
  }

  TEST_CASE("order maps are closed under composition and inverse") {
    for (const Poset& P : sample_posets()) {
      const auto maps = enumerate_order_maps(P);
      auto listed = [&](const std::vector<std::uint32_t>& m, OrderMap::Kind k) {
        return std::any_of(maps.begin(), maps.end(), [&](const OrderMap& o) { return o.mapping == m && o.kind == k; });
      };
      for (const auto& a : maps) {
        CHECK(listed(a.inverse().mapping, a.kind));
        for (const auto& b : maps) {
          std::vector<std::uint32_t> c(P.size());
          for (std::uint32_t x = 0; x < P.size(); ++x) c[x] = a(b(x));
          if (a.kind == b.kind) CHECK(listed(c, OrderMap::Kind::automorphism));
        }
      }
    }
  }

  TEST_CASE("length, Hasse edges and intervals") {
    for (const Poset& P : sample_posets()) {
      CHECK(P.length() + 1 <= std::max<std::size_t>(P.size(), 1));
      std::vector<Pair> covers;
      for (std::uint32_t x = 0; x < P.size(); ++x)
        for (std::uint32_t y = 0; y < P.size(); ++y) {
          if (!P.lt(x, y)) continue;
          bool between = false;
          for (std::uint32_t z = 0; z < P.size(); ++z) between = between || (P.lt(x, z) && P.lt(z, y));
          if (!between) covers.push_back({x, y});
          std::vector<std::uint32_t> iv;
          for (std::uint32_t z = 0; z < P.size(); ++z)
            if (P.leq(x, z) && P.leq(z, y)) iv.push_back(z);
          CHECK(P.interval(x, y) == iv);
        }
      std::sort(covers.begin(), covers.end());
      auto hasse = P.hasse_edges();
      std::sort(hasse.begin(), hasse.end());
      CHECK(hasse == covers);
    }
    CHECK(Poset::chain(4).length() == 3);
  }

  TEST_CASE("relation closure is transitive") {
    const Poset P = Poset::from_relations({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    CHECK(P.leq(P.index_of("1"), P.index_of("3")));
    CHECK_THROWS_AS(P.index_of("9"), UnknownLabel);
  }
}
