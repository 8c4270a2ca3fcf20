#include "incalg/potents.hpp"

#include <functional>
#include <limits>

#include "incalg/coded.hpp"
#include "incalg/random.hpp"

namespace incalg {

std::uint64_t algebra_size(const Algebra& alg) {
  if (!alg.field().is_finite()) return std::numeric_limits<std::uint64_t>::max();
  std::uint64_t s = 1;
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    if (s > std::numeric_limits<std::uint64_t>::max() / alg.field().order())
      return std::numeric_limits<std::uint64_t>::max();
    s *= alg.field().order();
  }
  return s;
}

std::vector<IncElement> enumerate_k_potents(const AlgebraPtr& alg, unsigned k, std::uint64_t budget,
                                            unsigned workers) {
  if (!alg->field().is_finite()) throw InfiniteField("cannot enumerate k-potents over Q");
  const std::uint64_t need = algebra_size(*alg);
  if (need > budget)
    throw BudgetExceeded("enumerating k-potents needs a budget of " + std::to_string(need) + " elements (have " +
                         std::to_string(budget) + ")");
  const CodedAlgebra ca(alg);
  std::vector<IncElement> out;
  for (Code c : coded_k_potents(ca, k, workers)) out.push_back(ca.decode(c));
  return out;
}

std::vector<IncElement> sample_k_potents(const AlgebraPtr& alg, unsigned k, std::size_t count, std::mt19937_64& rng) {
  if (k < 2) throw HypothesesNotMet("k-potents need k >= 2");
  const Field& F = alg->field();
  std::vector<Scalar> values{F.zero()};
  for (const auto& r : F.roots_of_unity(k - 1)) values.push_back(r);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  std::vector<IncElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    IncElement d(alg);
    for (std::size_t x = 0; x < alg->n(); ++x) d.set(x, values[pick(rng)]);
    out.push_back(conjugate(d, random_invertible(alg, rng)));
  }
  return out;
}

IncElement simultaneous_diagonalize(const std::vector<IncElement>& alphas) {
  if (alphas.empty()) throw HypothesesNotMet("no idempotents to diagonalize");
  if (alphas.size() > 20) throw HypothesesNotMet("at most 20 idempotents are diagonalized at once");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    alphas.front().require_same(alphas[i]);
    if (alphas[i] * alphas[i] != alphas[i]) throw NotIdempotent("alpha_" + std::to_string(i + 1) + " is not idempotent");
    for (std::size_t j = 0; j < i; ++j)
      if (alphas[i] * alphas[j] != alphas[j] * alphas[i])
        throw NotCommuting("alpha_" + std::to_string(j + 1) + " and alpha_" + std::to_string(i + 1) + " do not commute");
  }
  const AlgebraPtr& alg = alphas.front().algebra_ptr();
  const IncElement delta = IncElement::delta(alg);
  std::vector<IncElement> eps;
  for (const auto& a : alphas) eps.push_back(diagonal_part(a));

  IncElement beta(alg);
  std::function<void(std::size_t, const IncElement&, const IncElement&)> walk =
      [&](std::size_t i, const IncElement& A, const IncElement& E) {
        if (A.is_zero() || E.is_zero()) return;
        if (i == alphas.size()) {
          beta += A * E;
          return;
        }
        walk(i + 1, A * alphas[i], E * eps[i]);
        walk(i + 1, A * (delta - alphas[i]), E * (delta - eps[i]));
      };
  walk(0, delta, delta);

  if (diagonal_part(beta) != delta) throw CertificateFailed("simultaneous diagonalizer has beta_D != delta");
  const IncElement inv = inverse(beta);
  for (std::size_t i = 0; i < alphas.size(); ++i)
    if (beta * eps[i] * inv != alphas[i])
      throw CertificateFailed("beta fails to conjugate the diagonal of alpha_" + std::to_string(i + 1) + " back");
  return beta;
}

IncElement SpectralDecomposition::recompose() const {
  IncElement a(original.algebra_ptr());
  for (std::size_t i = 0; i < idempotents.size(); ++i)
    a += epsilon.pow(-static_cast<long>(i + 1)) * idempotents[i];
  return a;
}

SpectralDecomposition spectral_decompose(const IncElement& a, unsigned k) {
  if (k < 2) throw NotKPotent("k-potents need k >= 2");
  if (!is_k_potent(a, k)) throw NotKPotent("element is not a " + std::to_string(k) + "-potent");
  const Field& F = a.algebra().field();
  Scalar eps;
  try {
    eps = F.primitive_root_of_unity(k - 1);
  } catch (const NotFound&) {
    throw NoPrimitiveRoot(F.name() + " has no primitive " + std::to_string(k - 1) + "-th root of unity");
  }
  const Scalar km1 = F.from_int(static_cast<long>(k) - 1);
  if (km1.is_zero()) throw NoPrimitiveRoot("k-1 is not invertible in " + F.name());
  const Scalar scale = km1.inv();

  std::vector<IncElement> powers{a};
  for (unsigned s = 2; s < k; ++s) powers.push_back(powers.back() * a);

  SpectralDecomposition d{k, eps, {}, a};
  for (unsigned i = 1; i < k; ++i) {
    IncElement b(a.algebra_ptr());
    for (unsigned s = 1; s < k; ++s) b += eps.pow(static_cast<long>(i) * s) * powers[s - 1];
    d.idempotents.push_back(scale * b);
  }

  for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
    const auto& bi = d.idempotents[i];
    if (bi * bi != bi) throw CertificateFailed("spectral component b_" + std::to_string(i + 1) + " is not idempotent");
    for (std::size_t j = 0; j < d.idempotents.size(); ++j)
      if (i != j && !(bi * d.idempotents[j]).is_zero())
        throw CertificateFailed("spectral components are not orthogonal");
  }
  if (d.recompose() != a) throw CertificateFailed("spectral components do not recombine");
  return d;
}

IncElement conjugate_to_diagonal(const IncElement& f, unsigned k) {
  if (k < 2 || !is_k_potent(f, k)) throw NotKPotent("element is not a " + std::to_string(k) + "-potent");
  const SpectralDecomposition d = [&] {
    try {
      return spectral_decompose(f, k);
    } catch (const NoPrimitiveRoot& e) {
      throw HypothesesNotMet(std::string("cannot diagonalize: ") + e.what());
    }
  }();
  const IncElement sigma = simultaneous_diagonalize(d.idempotents);
  if (sigma * diagonal_part(f) * inverse(sigma) != f)
    throw CertificateFailed("conjugator does not reproduce the k-potent");
  return sigma;
}

bool is_primitive_idempotent(const IncElement& e) {
  if (e * e != e) throw NotIdempotent("element is not idempotent");
  conjugate_to_diagonal(e, 2);
  std::size_t support = 0;
  for (std::size_t x = 0; x < e.algebra().n(); ++x) support += !e[x].is_zero();
  return support == 1;
}

}  // namespace incalg
