#include "doctest.h"
#include "incalg/demos.hpp"
#include "incalg/random.hpp"

using namespace incalg;

TEST_SUITE("io") {
  TEST_CASE("poset text and JSON formats") {
    const Poset a = parse_poset("4\n1 < 2\n2 < 3\n# comment\n\n1 < 4\n");
    CHECK(a == example_poset());
    const Poset b = parse_poset(R"({"labels": [1, 2, 3, 4], "relations": [[1, 2], [2, 3], [1, 4]]})");
    CHECK(b == example_poset());
    CHECK(parse_poset(format_poset_text(a)) == a);
    CHECK(parse_poset_json(poset_json(a)) == a);
    CHECK_THROWS_AS(parse_poset("x\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("2\n1 > 2\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("2\n1 < 3\n"), UnknownLabel);
    CHECK_THROWS_AS(parse_poset("{\"labels\": [1, 2], "), ParseError);
  }

  TEST_CASE("element triples round-trip") {
    std::mt19937_64 rng(1);
    for (const Field* F : {&Field::finite(4), &Field::finite(9), &Field::rational()}) {
      const auto alg = Algebra::make(example_poset(), *F);
      for (int i = 0; i < 20; ++i) {
        const auto f = random_element(alg, rng);
        CHECK(parse_element(alg, format_element(f)) == f);
        CHECK(parse_element(alg, element_json(f).dump()) == f);
      }
    }
    const auto alg = Algebra::make(Poset::chain(2), Field::finite(4));
    const auto f = parse_element(alg, "1 1 2\n1 2 3\n");
    CHECK(f.at(0, 0).code() == 2);
    CHECK(f.at(0, 1).code() == 3);
    CHECK(f.at(1, 1).is_zero());
    CHECK_THROWS_AS(parse_element(alg, "2 1 1\n"), IncomparablePair);
    CHECK_THROWS_AS(parse_element(alg, "1 1\n"), ParseError);
  }

  TEST_CASE("map files round-trip") {
    std::mt19937_64 rng(2);
    for (const Field* F : {&Field::finite(2), &Field::finite(8), &Field::rational()}) {
      const auto alg = Algebra::make(Poset::chain(3), *F);
      std::vector<IncElement> imgs;
      for (std::size_t j = 0; j < alg->dim(); ++j) imgs.push_back(random_element(alg, rng));
      const auto m = LinMap::from_images(alg, imgs);
      CHECK(parse_linmap(alg, format_linmap(m)) == m);
    }
    const auto alg = Algebra::make(Poset::chain(2), Field::finite(2));
    CHECK(parse_linmap(alg, "2 3\n1 0 0\n0 1 0\n0 0 1\n") == LinMap::identity(alg));
    // Column j is the image of basis element j: e_1 -> e_1 + delta etc.
    const auto shift = parse_linmap(alg, "2 3\n1 0 0\n0 1 0\n1 1 1\n");
    CHECK(shift == z2_shift(alg));
    CHECK_THROWS_AS(parse_linmap(alg, "3 3\n1 0 0\n0 1 0\n0 0 1\n"), FieldMismatch);
    CHECK_THROWS_AS(parse_linmap(alg, "2 4\n"), DimensionMismatch);
    CHECK_THROWS_AS(parse_linmap(alg, "2 3\n1 0 0\n0 1 0\n"), ParseError);
  }

  TEST_CASE("reports serialize") {
    const auto alg = Algebra::make(Poset::chain(2), Field::finite(3));
    const auto rep = classify_preserver(LinMap::identity(alg), 2);
    const json j = to_json(rep);
    CHECK(j.at("tag") == "automorphism");
    CHECK(j.at("regime") == "jordan");
    CHECK(j.contains("jordan"));
    const auto d = spectral_decompose(IncElement::delta(Algebra::make(Poset::chain(2), Field::finite(5))), 3);
    CHECK(to_json(d).at("idempotents").size() == 2);
    CHECK(to_json(evaluate_demo("z2-shift")).at("all_hold") == true);
  }
}
