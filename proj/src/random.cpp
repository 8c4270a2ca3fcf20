#include "incalg/random.hpp"

#include <algorithm>

namespace incalg {

Scalar random_scalar(const Field& F, std::mt19937_64& rng, bool nonzero) {
  if (F.is_finite()) {
    std::uniform_int_distribution<unsigned> d(nonzero ? 1 : 0, F.order() - 1);
    return F.from_code(d(rng));
  }
  std::uniform_int_distribution<int> d(-3, 3);
  int v = d(rng);
  while (nonzero && v == 0) v = d(rng);
  return F.from_int(v);
}

IncElement random_element(const AlgebraPtr& alg, std::mt19937_64& rng) {
  std::vector<Scalar> c;
  for (std::size_t j = 0; j < alg->dim(); ++j) c.push_back(random_scalar(alg->field(), rng));
  return IncElement(alg, std::move(c));
}

IncElement random_invertible(const AlgebraPtr& alg, std::mt19937_64& rng) {
  std::vector<Scalar> c;
  for (std::size_t j = 0; j < alg->dim(); ++j) c.push_back(random_scalar(alg->field(), rng, j < alg->n()));
  return IncElement(alg, std::move(c));
}

namespace {

bool is_multiplicative(const IncElement& s) {
  const auto& P = s.algebra().poset();
  for (const auto& [x, y] : P.strict_pairs())
    for (std::uint32_t z = x + 1; z < y; ++z)
      if (P.leq(x, z) && P.leq(z, y) && s.at(x, z) * s.at(z, y) != s.at(x, y)) return false;
  return true;
}

}  // namespace

IncElement random_multiplicative(const AlgebraPtr& alg, std::mt19937_64& rng) {
  const auto& P = alg->poset();
  const Field& F = alg->field();
  auto pairs = P.strict_pairs();
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
    return P.interval(a.first, a.second).size() < P.interval(b.first, b.second).size();
  });
  for (int attempt = 0; attempt < 64; ++attempt) {
    IncElement s = IncElement::delta(alg);
    for (const auto& [x, y] : pairs) {
      const auto iv = P.interval(x, y);
      if (iv.size() == 2) {
        s.set(alg->index(x, y), random_scalar(F, rng, true));
      } else {
        const std::uint32_t z = iv[1];
        s.set(alg->index(x, y), s.at(x, z) * s.at(z, y));
      }
    }
    if (is_multiplicative(s)) return s;
  }
  // sigma(x,y) = h(y)/h(x) is always multiplicative.
  std::vector<Scalar> h;
  for (std::size_t x = 0; x < alg->n(); ++x) h.push_back(random_scalar(F, rng, true));
  IncElement s = IncElement::delta(alg);
  for (const auto& [x, y] : P.strict_pairs()) s.set(alg->index(x, y), h[y] / h[x]);
  return s;
}

}  // namespace incalg
