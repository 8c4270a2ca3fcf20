#include "doctest.h"
#include "incalg/demos.hpp"
#include "incalg/random.hpp"
#include "incalg/subspace.hpp"
#include "oracles.hpp"

using namespace incalg;

namespace {

AlgebraPtr make(const Poset& P, unsigned q) { return Algebra::make(P, Field::finite(q)); }

IncElement e(const AlgebraPtr& alg, const std::string& x, const std::string& y) {
  return IncElement::basis(alg, alg->poset().index_of(x), alg->poset().index_of(y));
}

std::vector<AlgebraPtr> small_algebras() {
  const Poset v = Poset::from_relations({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}});
  return {make(Poset::chain(2), 2), make(Poset::chain(2), 3), make(Poset::chain(3), 2), make(v, 2),
          make(example_poset(), 2)};
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("delta is a two-sided identity") {
    std::mt19937_64 rng(1);
    for (const auto& alg : small_algebras()) {
      const auto d = IncElement::delta(alg);
      for (int i = 0; i < 50; ++i) {
        const auto f = random_element(alg, rng);
        CHECK(d * f == f);
        CHECK(f * d == f);
      }
    }
  }

  TEST_CASE("basis products follow e_xy e_uv = [y = u] e_xv") {
    for (const auto& alg : small_algebras())
      for (std::size_t a = 0; a < alg->dim(); ++a)
        for (std::size_t b = 0; b < alg->dim(); ++b) {
          const auto [x, y] = alg->pair(a);
          const auto [u, v] = alg->pair(b);
          const auto prod = IncElement::basis(alg, a) * IncElement::basis(alg, b);
          if (y == u)
            CHECK(prod == IncElement::basis(alg, x, v));
          else
            CHECK(prod.is_zero());
        }
  }

  TEST_CASE("3-chain: (e_12 + e_23)^2 = e_13") {
    const auto alg = make(Poset::chain(3), 5);
    const auto f = e(alg, "1", "2") + e(alg, "2", "3");
    CHECK(f * f == e(alg, "1", "3"));
    CHECK(oracle::product(f, f) == e(alg, "1", "3"));
  }

  TEST_CASE("convolution agrees with matrix multiplication") {
    std::mt19937_64 rng(2);
    const Poset v = Poset::from_relations({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}});
    std::vector<AlgebraPtr> algs = small_algebras();
    algs.push_back(make(example_poset(), 9));
    algs.push_back(Algebra::make(Poset::chain(4), Field::rational()));
    algs.push_back(Algebra::make(v, Field::rational()));
    for (const auto& alg : algs)
      for (int i = 0; i < 100; ++i) {
        const auto f = random_element(alg, rng), g = random_element(alg, rng);
        CHECK(f * g == oracle::product(f, g));
      }
  }

  TEST_CASE("associativity: exhaustive triples on small algebras, random otherwise") {
    for (const auto& alg : {make(Poset::chain(2), 2), make(Poset::chain(2), 3), make(Poset::chain(3), 2)}) {
      const auto all = oracle::all_elements(alg);
      bool ok = true;
      for (const auto& f : all)
        for (const auto& g : all) {
          const auto fg = f * g;
          for (const auto& h : all) ok = ok && fg * h == f * (g * h);
        }
      CHECK(ok);
    }
    std::mt19937_64 rng(3);
    for (const auto& alg : {make(example_poset(), 4), make(Poset::chain(4), 7)})
      for (int i = 0; i < 300; ++i) {
        const auto f = random_element(alg, rng), g = random_element(alg, rng), h = random_element(alg, rng);
        CHECK((f * g) * h == f * (g * h));
      }
  }

  TEST_CASE("basis elements, delta and e_A") {
    const auto alg = make(example_poset(), 3);
    CHECK(IncElement::e_set(alg, {}).is_zero());
    CHECK(IncElement::e_set(alg, {0, 1, 2, 3}) == IncElement::delta(alg));
    const auto e13 = e(alg, "1", "3");
    for (std::size_t j = 0; j < alg->dim(); ++j) {
      const auto [x, y] = alg->pair(j);
      const bool at13 = alg->poset().label(x) == "1" && alg->poset().label(y) == "3";
      CHECK(e13[j] == (at13 ? alg->field().one() : alg->field().zero()));
    }
    CHECK_THROWS_AS(IncElement::basis(alg, alg->poset().index_of("3"), alg->poset().index_of("4")), IncomparablePair);
    CHECK_THROWS_AS(IncElement::basis(alg, alg->poset().index_of("2"), alg->poset().index_of("1")), IncomparablePair);
  }

  TEST_CASE("diagonal part and the radical") {
    const auto alg = make(Poset::chain(2), 3);
    const auto d = IncElement::delta(alg);
    CHECK(diagonal_part(d + e(alg, "1", "2")) == d);
    CHECK(diagonal_part(e(alg, "1", "2")).is_zero());
    // f is in the radical iff f_D = 0 iff every element f g is nilpotent.
    for (const auto& f : oracle::all_elements(alg)) {
      bool nilpotent_products = true;
      for (const auto& g : oracle::all_elements(alg)) nilpotent_products = nilpotent_products && power(f * g, 2).is_zero();
      CHECK(in_radical(f) == nilpotent_products);
    }
  }

  TEST_CASE("inverse examples") {
    for (unsigned q : {2u, 3u, 5u}) {
      const auto alg = make(Poset::chain(2), q);
      const auto d = IncElement::delta(alg);
      const auto e12 = e(alg, "1", "2");
      CHECK(inverse(d + e12) == d - e12);
      CHECK_FALSE(try_inverse(e(alg, "1", "1")));
      CHECK_THROWS_AS(inverse(e(alg, "1", "1")), NotInvertible);
    }
  }

  TEST_CASE("try_inverse succeeds iff the diagonal is nonzero") {
    for (const auto& alg : {make(Poset::chain(2), 3), make(Poset::chain(3), 2), make(example_poset(), 2)})
      for (const auto& f : oracle::all_elements(alg)) {
        bool diag_ok = true;
        for (std::size_t x = 0; x < alg->n(); ++x) diag_ok = diag_ok && !f[x].is_zero();
        const auto g = try_inverse(f);
        REQUIRE(g.has_value() == diag_ok);
        if (g) {
          CHECK(f * *g == IncElement::delta(alg));
          CHECK(*g * f == IncElement::delta(alg));
        }
      }
  }

  TEST_CASE("k-potency examples") {
    const auto a2 = make(Poset::chain(2), 2);
    CHECK(is_k_potent(IncElement::delta(a2) + e(a2, "1", "2"), 3));
    CHECK_FALSE(is_k_potent(IncElement::delta(a2) + e(a2, "1", "2"), 2));
    const auto a3 = make(Poset::chain(2), 3);
    CHECK(is_k_potent(e(a3, "1", "1") + e(a3, "1", "2"), 2));
    const auto ex = make(example_poset(), 5);
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<std::uint32_t> A;
      for (std::uint32_t x = 0; x < 4; ++x)
        if (mask >> x & 1) A.push_back(x);
      for (unsigned k = 2; k <= 6; ++k) CHECK(is_k_potent(IncElement::e_set(ex, A), k));
    }
    for (const auto& f : oracle::all_elements(a3))
      for (unsigned k = 2; k <= 4; ++k) CHECK(is_k_potent(f, k) == oracle::is_potent(f, k));
  }

  TEST_CASE("Jordan product and Lie bracket") {
    std::mt19937_64 rng(4);
    const auto alg = make(Poset::chain(3), 5);
    for (int i = 0; i < 30; ++i) {
      const auto f = random_element(alg, rng);
      CHECK(lie_bracket(f, f).is_zero());
    }
    CHECK(jordan_product(e(alg, "1", "2"), e(alg, "2", "3")) == e(alg, "1", "3"));
    for (int i = 0; i < 30; ++i) {
      const auto d = diagonal_part(random_element(alg, rng));
      for (std::size_t j = alg->n(); j < alg->dim(); ++j) {
        const auto [u, v] = alg->pair(j);
        CHECK(jordan_product(d, IncElement::basis(alg, j)) == (d[u] + d[v]) * IncElement::basis(alg, j));
      }
    }
  }

  TEST_CASE("conjugation") {
    std::mt19937_64 rng(5);
    const auto alg = make(Poset::chain(2), 3);
    const auto d = IncElement::delta(alg);
    for (const auto& f : oracle::all_elements(alg)) CHECK(conjugate(f, d) == f);
    CHECK(conjugate(e(alg, "2", "2"), d + e(alg, "1", "2")) == e(alg, "2", "2") + e(alg, "1", "2"));
    for (const auto& big : {make(example_poset(), 4), make(Poset::chain(3), 7)})
      for (int i = 0; i < 50; ++i) {
        const auto diag = diagonal_part(random_element(big, rng));
        CHECK(diagonal_part(conjugate(diag, random_invertible(big, rng))) == diag);
      }
    CHECK_THROWS_AS(conjugate(d, e(alg, "1", "1")), NotInvertible);
  }

  TEST_CASE("centralizer basis examples") {
    const auto chain = make(Poset::chain(2), 2);
    CHECK(centralizer_basis(chain, {}).size() == chain->dim());
    CHECK(centralizer_basis(chain, {0, 1}).size() == chain->dim());
    const auto c1 = centralizer_basis(chain, {0});
    REQUIRE(c1.size() == 2);
    CHECK(c1[0] == e(chain, "1", "1"));
    CHECK(c1[1] == e(chain, "2", "2"));
    const auto ex = make(example_poset(), 2);
    const auto P = ex->poset();
    const auto c12 = centralizer_basis(ex, {P.index_of("1"), P.index_of("2")});
    CHECK(c12.size() == 5);
    int strict = 0;
    for (const auto& b : c12)
      if (!b.is_diagonal()) {
        ++strict;
        CHECK(b == e(ex, "1", "2"));
      }
    CHECK(strict == 1);
  }

  TEST_CASE("centralizer spans equal exhaustively computed commutants") {
    for (const auto& alg : small_algebras())
      for (std::uint32_t mask = 0; mask < (1u << alg->n()); ++mask) {
        std::vector<std::uint32_t> A;
        for (std::uint32_t x = 0; x < alg->n(); ++x)
          if (mask >> x & 1) A.push_back(x);
        const auto eA = IncElement::e_set(alg, A);
        const auto span = Subspace::span_of(centralizer_basis(alg, A));
        std::size_t commuting = 0;
        bool agree = true;
        oracle::for_each_element(alg, [&](const IncElement& f) {
          const bool c = oracle::product(f, eA) == oracle::product(eA, f);
          commuting += c;
          agree = agree && c == span.contains(f.coeffs());
        });
        CHECK(agree);
        std::size_t span_size = 1;
        for (std::size_t i = 0; i < span.dim(); ++i) span_size *= alg->field().order();
        CHECK(commuting == span_size);
      }
  }

  TEST_CASE("central elements") {
    const auto alg = make(Poset::chain(2), 4);
    CHECK(is_central(IncElement::delta(alg)));
    CHECK_FALSE(is_central(e(alg, "1", "1")));
    for (const auto& r : alg->field().elements()) CHECK(is_central(r * IncElement::delta(alg)));
    // Exhaustive check of the center against commutation with everything.
    const auto small = make(Poset::chain(2), 3);
    const auto all = oracle::all_elements(small);
    for (const auto& f : all) {
      bool commutes = true;
      for (const auto& g : all) commutes = commutes && oracle::product(f, g) == oracle::product(g, f);
      CHECK(is_central(f) == commutes);
    }
    CHECK_THROWS_AS(is_central(IncElement::delta(make(Poset::antichain(2), 2))), DisconnectedPoset);
  }

  TEST_CASE("structure checks") {
    const auto a = make(Poset::chain(2), 2), b = make(Poset::chain(2), 3);
    CHECK_THROWS_AS(IncElement::delta(a) * IncElement::delta(b), StructureMismatch);
    const auto c = make(Poset::chain(3), 2);
    CHECK_THROWS_AS(IncElement::delta(a) + IncElement::delta(c), StructureMismatch);
    CHECK(IncElement::delta(a) == IncElement::delta(make(Poset::chain(2), 2)));
  }

  TEST_CASE("rational arithmetic stays exact") {
    const auto alg = Algebra::make(Poset::chain(3), Field::rational());
    const Field& Q = Field::rational();
    auto f = IncElement::delta(alg) + Q.parse_scalar("1/3") * e(alg, "1", "2") + Q.parse_scalar("-7/5") * e(alg, "2", "3");
    f.set(0, Q.parse_scalar("2/3"));
    const auto g = inverse(f);
    CHECK(f * g == IncElement::delta(alg));
    CHECK(g * f == IncElement::delta(alg));
  }
}
