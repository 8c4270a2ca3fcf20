#include "doctest.h"
#include "incalg/demos.hpp"
#include "incalg/random.hpp"
#include "oracles.hpp"

using namespace incalg;

namespace {

AlgebraPtr make(const Poset& P, unsigned q) { return Algebra::make(P, Field::finite(q)); }

IncElement e(const AlgebraPtr& alg, const std::string& x, const std::string& y) {
  return IncElement::basis(alg, alg->poset().index_of(x), alg->poset().index_of(y));
}

IncElement sum_of_powers(const IncElement& a, unsigned k) {
  IncElement b(a.algebra_ptr());
  for (unsigned i = 1; i < k; ++i) b += power(a, i);
  return b;
}

void check_spectral(const IncElement& a, unsigned k) {
  const auto d = spectral_decompose(a, k);
  REQUIRE(d.idempotents.size() == k - 1);
  for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
    const auto& bi = d.idempotents[i];
    CHECK(oracle::product(bi, bi) == bi);
    for (std::size_t j = 0; j < d.idempotents.size(); ++j)
      if (i != j) CHECK(oracle::product(bi, d.idempotents[j]).is_zero());
  }
  // sum of epsilon^{-i} b_i, recomputed here.
  IncElement r(a.algebra_ptr());
  for (std::size_t i = 0; i < d.idempotents.size(); ++i)
    r += d.epsilon.pow(-static_cast<long>(i + 1)) * d.idempotents[i];
  CHECK(r == a);
  CHECK(d.recompose() == a);
}

void check_conjugator(const IncElement& f, unsigned k) {
  const auto s = conjugate_to_diagonal(f, k);
  const auto fd = diagonal_part(f);
  CHECK(oracle::product(oracle::product(s, fd), inverse(s)) == f);
  for (std::size_t x = 0; x < f.algebra().n(); ++x)
    CHECK((fd[x].is_zero() || fd[x].pow(k - 1).is_one()));
}

}  // namespace

TEST_SUITE("potents") {
  TEST_CASE("2-chain over GF(2) has exactly six idempotents") {
    const auto alg = make(Poset::chain(2), 2);
    const auto d = IncElement::delta(alg);
    const auto e1 = e(alg, "1", "1"), e2 = e(alg, "2", "2"), e12 = e(alg, "1", "2");
    const auto got = enumerate_k_potents(alg, 2);
    CHECK(got.size() == 6);
    CHECK(oracle::key_set(got) == oracle::key_set({IncElement(alg), d, e1, e2, e1 + e12, e2 + e12}));
  }

  TEST_CASE("enumeration agrees with an independent scan") {
    const Poset v = Poset::from_relations({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}});
    for (const auto& alg : {make(Poset::chain(2), 2), make(Poset::chain(2), 3), make(Poset::chain(2), 4),
                            make(Poset::chain(3), 2), make(v, 2), make(example_poset(), 2), make(Poset::chain(2), 5)})
      for (unsigned k = 2; k <= 4; ++k) {
        const auto got = enumerate_k_potents(alg, k);
        const auto want = oracle::potents(alg, k);
        CHECK(got.size() == want.size());
        CHECK(oracle::key_set(got) == oracle::key_set(want));
        // Worker count does not change the result or its order.
        const auto par = enumerate_k_potents(alg, k, kDefaultPotentBudget, 3);
        CHECK(oracle::key_set(par) == oracle::key_set(got));
        bool same_order = par.size() == got.size();
        for (std::size_t i = 0; same_order && i < got.size(); ++i) same_order = par[i] == got[i];
        CHECK(same_order);
      }
  }

  TEST_CASE("all diagonal 0/1 elements are idempotent") {
    const auto alg = make(example_poset(), 3);
    const auto keys = oracle::key_set(enumerate_k_potents(alg, 2));
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<std::uint32_t> A;
      for (std::uint32_t x = 0; x < 4; ++x)
        if (mask >> x & 1) A.push_back(x);
      CHECK(keys.count(oracle::key(IncElement::e_set(alg, A))) == 1);
    }
  }

  TEST_CASE("delta + e_12 is a tripotent over GF(2)") {
    const auto alg = make(Poset::chain(2), 2);
    const auto keys = oracle::key_set(enumerate_k_potents(alg, 3));
    CHECK(keys.count(oracle::key(IncElement::delta(alg) + e(alg, "1", "2"))) == 1);
  }

  TEST_CASE("budget and field errors") {
    const auto alg = make(example_poset(), 7);
    CHECK_THROWS_AS(enumerate_k_potents(alg, 2), BudgetExceeded);
    try {
      enumerate_k_potents(alg, 2, 1000);
    } catch (const BudgetExceeded& err) {
      CHECK(std::string(err.what()).find("5764801") != std::string::npos);
    }
    CHECK_THROWS_AS(enumerate_k_potents(Algebra::make(Poset::chain(2), Field::rational()), 2), InfiniteField);
  }

  TEST_CASE("b = a + ... + a^{k-1} satisfies b^2 = (k-1) b on every enumerated k-potent") {
    for (const auto& [alg, k] : std::vector<std::pair<AlgebraPtr, unsigned>>{{make(Poset::chain(2), 5), 3},
                                                                            {make(Poset::chain(2), 7), 4},
                                                                            {make(Poset::chain(2), 2), 3},
                                                                            {make(Poset::chain(2), 3), 3},
                                                                            {make(Poset::chain(3), 3), 3},
                                                                            {make(Poset::chain(2), 4), 4}})
      for (const auto& a : enumerate_k_potents(alg, k)) {
        const auto b = sum_of_powers(a, k);
        CHECK(oracle::product(b, b) == alg->field().from_int(k - 1) * b);
      }
  }

  TEST_CASE("simultaneous diagonalization examples") {
    const auto alg = make(Poset::chain(2), 3);
    CHECK(simultaneous_diagonalize({IncElement::e_set(alg, {0})}) == IncElement::delta(alg));
    const auto a = e(alg, "2", "2") + e(alg, "1", "2");
    const auto beta = simultaneous_diagonalize({a});
    // The two-term formula evaluated directly.
    const auto d = IncElement::delta(alg), eps = diagonal_part(a);
    CHECK(beta == oracle::product(a, eps) + oracle::product(d - a, d - eps));
    CHECK(diagonal_part(beta) == d);
    CHECK(oracle::product(oracle::product(beta, eps), inverse(beta)) == a);
    const auto beta2 = simultaneous_diagonalize({a, d});
    CHECK(try_inverse(beta2).has_value());
    CHECK(conjugate(diagonal_part(a), beta2) == a);
    CHECK(conjugate(d, beta2) == d);
    CHECK_THROWS_AS(simultaneous_diagonalize({a + a}), NotIdempotent);
    CHECK_THROWS_AS(simultaneous_diagonalize({e(alg, "1", "1"), e(alg, "2", "2") + e(alg, "1", "2")}), NotCommuting);
  }

  TEST_CASE("simultaneous diagonalization of every commuting idempotent family") {
    for (const auto& alg : {make(Poset::chain(2), 2), make(Poset::chain(2), 3), make(Poset::chain(3), 2)}) {
      const auto idem = oracle::potents(alg, 2);
      std::size_t pairs = 0;
      for (const auto& a : idem)
        for (const auto& b : idem) {
          if (oracle::product(a, b) != oracle::product(b, a)) continue;
          ++pairs;
          const auto beta = simultaneous_diagonalize({a, b});
          CHECK(diagonal_part(beta) == IncElement::delta(alg));
          CHECK(conjugate(diagonal_part(a), beta) == a);
          CHECK(conjugate(diagonal_part(b), beta) == b);
        }
      CHECK(pairs > idem.size());
    }
  }

  TEST_CASE("spectral decomposition examples") {
    const auto g5 = make(Poset::chain(2), 5);
    // Idempotent: only the last b is nonzero.
    const auto a = e(g5, "1", "1") + e(g5, "1", "2");
    for (unsigned k : {3u, 5u}) {
      const auto d = spectral_decompose(a, k);
      for (unsigned i = 0; i + 1 < k - 1; ++i) CHECK(d.idempotents[i].is_zero());
      CHECK(d.idempotents.back() == a);
    }
    // -delta over GF(5) with k = 3.
    const auto m = -IncElement::delta(g5);
    const auto d = spectral_decompose(m, 3);
    CHECK(d.epsilon == g5->field().from_int(4));
    CHECK(d.idempotents[0] == IncElement::delta(g5));
    CHECK(d.idempotents[1].is_zero());
    CHECK(d.epsilon.inv() * d.idempotents[0] == m);
    CHECK_THROWS_AS(spectral_decompose(e(g5, "1", "2"), 3), NotKPotent);
    CHECK_THROWS_AS(spectral_decompose(IncElement::delta(make(Poset::chain(2), 2)), 3), NoPrimitiveRoot);
  }

  TEST_CASE("spectral invariants on every k-potent of small algebras") {
    for (const auto& [alg, k] : std::vector<std::pair<AlgebraPtr, unsigned>>{
             {make(Poset::chain(2), 5), 3}, {make(Poset::chain(2), 5), 5}, {make(Poset::chain(2), 7), 4},
             {make(Poset::chain(2), 4), 4}, {make(Poset::chain(3), 3), 3}})
      for (const auto& a : enumerate_k_potents(alg, k)) check_spectral(a, k);
  }

  TEST_CASE("sampled 4-potents decompose over GF(7) and are refused over GF(5)") {
    std::mt19937_64 rng(7);
    const auto g5 = make(example_poset(), 5);
    for (const auto& a : sample_k_potents(g5, 4, 10, rng)) {
      CHECK(oracle::is_potent(a, 4));
      CHECK_THROWS_AS(spectral_decompose(a, 4), NoPrimitiveRoot);
    }
    const auto alg = make(example_poset(), 7);
    for (const auto& a : sample_k_potents(alg, 4, 50, rng)) {
      CHECK(oracle::is_potent(a, 4));
      check_spectral(a, 4);
      check_conjugator(a, 4);
    }
  }

  TEST_CASE("conjugate_to_diagonal") {
    const auto alg = make(Poset::chain(2), 5);
    for (const auto& f : enumerate_k_potents(alg, 3)) {
      check_conjugator(f, 3);
      if (f.is_diagonal()) CHECK(conjugate_to_diagonal(f, 3) == IncElement::delta(alg));
    }
    // Some conjugator exists for every tripotent: brute-force cross-check.
    const auto all = oracle::all_elements(alg);
    for (const auto& f : enumerate_k_potents(alg, 3)) {
      if (f.is_diagonal()) continue;
      bool found = false;
      for (const auto& s : all) {
        const auto inv = try_inverse(s);
        if (inv && oracle::product(oracle::product(s, diagonal_part(f)), *inv) == f) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
    const auto g2 = make(Poset::chain(2), 2);
    CHECK_THROWS_AS(conjugate_to_diagonal(IncElement::delta(g2) + e(g2, "1", "2"), 3), HypothesesNotMet);
    CHECK_THROWS_AS(conjugate_to_diagonal(e(alg, "1", "2"), 3), NotKPotent);
  }

  TEST_CASE("no invertible element diagonalizes delta + e_12 over GF(2)") {
    const auto alg = make(Poset::chain(2), 2);
    const auto f = IncElement::delta(alg) + e(alg, "1", "2");
    const auto all = oracle::all_elements(alg);
    for (const auto& s : all) {
      const auto inv = try_inverse(s);
      if (!inv) continue;
      for (const auto& d : all)
        if (d.is_diagonal()) CHECK(oracle::product(oracle::product(s, d), *inv) != f);
    }
  }

  TEST_CASE("primitive idempotents against an exhaustive orthogonal-pair search") {
    for (const auto& alg : {make(Poset::chain(2), 2), make(Poset::chain(2), 3), make(Poset::chain(3), 2)}) {
      const auto idem = oracle::potents(alg, 2);
      for (const auto& p : idem) {
        bool splits = false;
        for (const auto& a : idem)
          for (const auto& b : idem)
            splits = splits || (!a.is_zero() && !b.is_zero() && oracle::product(a, b).is_zero() &&
                                oracle::product(b, a).is_zero() && a + b == p);
        CHECK(is_primitive_idempotent(p) == (!p.is_zero() && !splits));
      }
    }
    const auto alg = make(example_poset(), 3);
    for (std::uint32_t x = 0; x < 4; ++x) CHECK(is_primitive_idempotent(IncElement::e_set(alg, {x})));
    CHECK_FALSE(is_primitive_idempotent(IncElement::e_set(alg, {0, 2})));
    const auto g2 = make(Poset::chain(2), 2);
    CHECK(is_primitive_idempotent(e(g2, "2", "2") + e(g2, "1", "2")));
    CHECK_THROWS_AS(is_primitive_idempotent(IncElement::delta(g2) + e(g2, "1", "2")), NotIdempotent);
  }

  TEST_CASE("rational k-potents") {
    std::mt19937_64 rng(11);
    const auto alg = Algebra::make(example_poset(), Field::rational());
    for (const auto& a : sample_k_potents(alg, 3, 40, rng)) {
      CHECK(oracle::is_potent(a, 3));
      check_spectral(a, 3);
      check_conjugator(a, 3);
      const auto b = sum_of_powers(a, 3);
      CHECK(b * b == alg->field().from_int(2) * b);
    }
  }
}
