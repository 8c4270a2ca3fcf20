#include "incalg/classify.hpp"

#include <algorithm>

namespace incalg {

LinMap JordanFactorization::recompose() const {
  const AlgebraPtr& alg = inner_beta.algebra_ptr();
  return inner(inner_beta) * induced(alg, order_map) * multiplicative(sigma);
}

namespace {

void require_connected(const Algebra& alg) {
  if (!is_connected(alg.poset())) throw DisconnectedPoset("classification needs a connected poset");
}

}  // namespace

JordanFactorization jordan_decompose(const LinMap& phi) {
  const AlgebraPtr& alg = phi.algebra_ptr();
  require_connected(*alg);
  if (!is_bijective(phi)) throw NotJordanAutomorphism("map is not bijective");
  if (auto c = is_jordan_homomorphism(phi); !c) throw NotJordanAutomorphism("Jordan identity fails at " + c.witness);

  const std::uint32_t n = static_cast<std::uint32_t>(alg->n());
  std::vector<std::uint32_t> lambda(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const IncElement px = phi.image(x);
    std::optional<std::uint32_t> hit;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (px[y].is_zero()) continue;
      if (!px[y].is_one() || hit)
        throw LambdaNotOrderMap("diagonal of phi(" + basis_name(*alg, x) + ") is not a single e_y");
      hit = y;
    }
    if (!hit) throw LambdaNotOrderMap("diagonal of phi(" + basis_name(*alg, x) + ") vanishes");
    lambda[x] = *hit;
  }
  OrderMap lam{lambda, OrderMap::Kind::automorphism};
  if (!is_order_map(alg->poset(), lambda, lam.kind)) {
    lam.kind = OrderMap::Kind::anti_automorphism;
    if (!is_order_map(alg->poset(), lambda, lam.kind))
      throw LambdaNotOrderMap("lambda is neither an order automorphism nor an anti-automorphism");
  }

  IncElement beta(alg);
  for (std::uint32_t x = 0; x < n; ++x) beta += phi.image(x) * IncElement::basis(alg, lambda[x], lambda[x]);
  const auto beta_inv = try_inverse(beta);
  if (!beta_inv) throw RecompositionMismatch("beta = sum phi(e_x) e_lambda(x) is not invertible");

  const LinMap rho = invert(induced(alg, lam)) * inner(*beta_inv) * phi;
  IncElement sigma(alg);
  for (std::size_t j = 0; j < alg->dim(); ++j) sigma.set(j, rho.image(j)[j]);
  if (!is_multiplicative_element(sigma)) throw RecompositionMismatch("recovered sigma is not multiplicative");

  JordanFactorization f{beta, lam, sigma};
  if (f.recompose() != phi) throw RecompositionMismatch("conj(beta) o lambda o M_sigma differs from phi");
  return f;
}

Z2Decomposition z2_decompose(const LinMap& phi, const std::vector<IncElement>* potents) {
  const AlgebraPtr& alg = phi.algebra_ptr();
  const Field& F = alg->field();
  if (!F.is_finite() || F.order() != 2) throw UnsupportedRegime("shift factorization is specific to GF(2)");
  require_connected(*alg);
  if (!is_bijective(phi)) throw NotBijective("map is not bijective");
  if (auto r = is_k_potent_preserver(phi, 2, PreserverMode::exhaustive, potents); !r)
    throw NotIdempotentPreserver("image of " + describe(*r.witness) + " is not idempotent");

  const std::size_t n = alg->n(), d = alg->dim();

  // Step 1: conjugate all phi(e_x) to diagonal form at once.
  std::vector<IncElement> alphas;
  for (std::size_t x = 0; x < n; ++x) alphas.push_back(phi.image(x));
  const IncElement beta = simultaneous_diagonalize(alphas);
  const LinMap eta = inner(beta);
  const LinMap eta_inv = inner(inverse(beta));
  const LinMap psi1 = eta_inv * phi;
  for (std::size_t x = 0; x < n; ++x)
    if (!psi1.image(x).is_diagonal()) throw RecompositionMismatch("conjugated image of e_x is not diagonal");

  // Step 2: psi1(e_xy) = theta(e_xy) + nu(e_xy).
  std::vector<std::size_t> theta(d);
  std::vector<IncElement> nu;
  std::vector<bool> taken(d, false);
  for (std::size_t j = n; j < d; ++j) {
    const IncElement g = psi1.image(j);
    std::optional<std::size_t> hit;
    for (std::size_t i = n; i < d; ++i) {
      if (g[i].is_zero()) continue;
      if (hit) throw ThetaNotSingleBasisVector("strict part of psi(" + basis_name(*alg, j) + ") = " + describe(g));
      hit = i;
    }
    if (!hit) throw ThetaNotSingleBasisVector("psi(" + basis_name(*alg, j) + ") has no strict part");
    if (taken[*hit]) throw ThetaNotBijective("theta repeats " + basis_name(*alg, *hit));
    taken[*hit] = true;
    theta[j] = *hit;
    IncElement v = diagonal_part(g);
    if (!is_central(v)) throw NuNotCentral("nu(" + basis_name(*alg, j) + ") = " + describe(v));
    nu.push_back(std::move(v));
  }

  // Step 3: tau is the identity on D and sends theta(e_xy) to theta(e_xy) + nu(e_xy).
  std::vector<IncElement> tau_images;
  for (std::size_t j = 0; j < d; ++j) tau_images.push_back(IncElement::basis(alg, j));
  for (std::size_t j = n; j < d; ++j) tau_images[theta[j]] += nu[j - n];
  const LinMap tau = LinMap::from_images(alg, tau_images);
  const LinMap psi = tau * psi1;
  if (!is_lie_homomorphism(psi) || !is_bijective(psi))
    throw RecompositionMismatch("tau o conj(beta)^{-1} o phi is not a Lie automorphism");

  // Step 4: move eta past tau.
  const LinMap id = LinMap::identity(alg);
  const LinMap shift = id + (tau - id) * eta_inv;
  const LinMap lie = eta * psi;
  if (!is_shift_map(shift) || !is_bijective(shift)) throw RecompositionMismatch("shift factor is not a bijective shift map");
  if (!is_lie_homomorphism(lie) || !is_bijective(lie)) throw RecompositionMismatch("Lie factor is not a Lie automorphism");
  if (shift * lie != phi) throw RecompositionMismatch("shift o lie differs from phi");
  return Z2Decomposition{beta, Z2Factorization{shift, lie}};
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::jordan: return "jordan";
    case Regime::char2_lie: return "char2-lie";
    case Regime::z2: return "z2";
    case Regime::scalar_split: return "scalar-split";
  }
  return "?";
}

Regime regime_for(const Field& F, unsigned k) {
  if (k < 2) throw UnsupportedRegime("k must be at least 2");
  if (k == 2) {
    if (F.characteristic() != 2) return Regime::jordan;
    return F.order() == 2 ? Regime::z2 : Regime::char2_lie;
  }
  if (F.from_int(static_cast<long>(k)).is_zero())
    throw UnsupportedRegime("characteristic of " + F.name() + " divides k = " + std::to_string(k));
  try {
    F.primitive_root_of_unity(k - 1);
  } catch (const NotFound&) {
    throw UnsupportedRegime(F.name() + " has no primitive " + std::to_string(k - 1) + "-th root of unity");
  }
  return Regime::scalar_split;
}

ScalarSplit scalar_split(const LinMap& phi, unsigned k) {
  const AlgebraPtr& alg = phi.algebra_ptr();
  const Field& F = alg->field();
  if (k < 3 || regime_for(F, k) != Regime::scalar_split) throw UnsupportedRegime("scalar split needs k >= 3");
  require_connected(*alg);
  if (!is_bijective(phi)) throw NotBijective("map is not bijective");

  const IncElement u = phi(IncElement::delta(alg));
  const Scalar r = u[0];
  if (u != r * IncElement::delta(alg)) throw PhiDeltaNotScalar("phi(delta) = " + describe(u));
  if (!r.pow(static_cast<long>(k) - 1).is_one())
    throw RootConditionFailed("r = " + r.to_string() + " has r^(k-1) != 1");

  const LinMap psi = r.pow(static_cast<long>(k) - 2) * phi;
  JordanFactorization jf = [&] {
    try {
      return jordan_decompose(psi);
    } catch (const Error& e) {
      throw DownstreamJordanFailure(std::string(e.kind()) + ": " + e.what());
    }
  }();
  if (r * psi != phi) throw RecompositionMismatch("r * psi differs from phi");
  const auto kind = jf.order_map.kind;
  return ScalarSplit{r, psi, kind, std::move(jf)};
}

ClassificationReport classify_preserver(const LinMap& phi, unsigned k, const ClassifyOptions& options) {
  const AlgebraPtr& alg = phi.algebra_ptr();
  const Field& F = alg->field();
  require_connected(*alg);
  const Regime regime = regime_for(F, k);
  if (!is_bijective(phi)) throw NotBijective("map is not bijective");

  PreserverMode mode = options.mode.value_or(
      F.is_finite() && algebra_size(*alg) <= options.budget ? PreserverMode::exhaustive : PreserverMode::sampled);
  if (options.potents) mode = options.mode.value_or(PreserverMode::exhaustive);
  const auto pres = is_k_potent_preserver(phi, k, mode, options.potents, options.budget);
  if (!pres) {
    const std::string msg = "image of the " + std::to_string(k) + "-potent " + describe(*pres.witness) + " is not a " +
                            std::to_string(k) + "-potent";
    if (k == 2) throw NotIdempotentPreserver(msg);
    throw NotKPotentPreserver(msg);
  }

  ClassificationReport rep{k, regime, mode, "", {}, std::nullopt, std::nullopt, std::nullopt, ""};
  rep.certificates.push_back({"bijective", true, ""});
  rep.certificates.push_back({std::to_string(k) + "-potent preserver", true,
                              std::string(to_string(mode)) + ", " + std::to_string(pres.checked) + " checked" +
                                  (mode == PreserverMode::sampled ? " (necessary, not sufficient)" : "")});

  auto add = [&](const std::string& name, const Check& c) { rep.certificates.push_back({name, c.holds, c.witness}); };

  switch (regime) {
    case Regime::jordan: {
      add("Jordan homomorphism", is_jordan_homomorphism(phi));
      rep.jordan = jordan_decompose(phi);
      rep.tag = to_string(rep.jordan->order_map.kind);
      add("recomposition", Check{});
      break;
    }
    case Regime::char2_lie: {
      const Check lie = is_lie_homomorphism(phi);
      Check idem;
      for (std::size_t x = 0; x < alg->n() && idem; ++x) {
        const auto px = phi.image(x);
        if (px * px != px) idem = Check::fail("phi(" + basis_name(*alg, x) + ") = " + describe(px));
      }
      add("Lie automorphism", lie);
      add("every phi(e_x) idempotent", idem);
      if (!lie || !idem) throw CertificateFailed("idempotent preserver fails the Lie automorphism certificate");
      add("proper: algebra automorphism", is_algebra_automorphism(phi));
      add("proper: algebra anti-automorphism", is_algebra_anti_automorphism(phi));
      rep.tag = "lie_automorphism";
      rep.note = "no automorphism or anti-automorphism factorization is attempted in characteristic 2";
      break;
    }
    case Regime::z2: {
      rep.z2 = z2_decompose(phi, mode == PreserverMode::exhaustive ? options.potents : nullptr);
      add("shift map", is_shift_map(rep.z2->factors.shift));
      add("Lie automorphism", is_lie_homomorphism(rep.z2->factors.lie_part));
      add("recomposition", Check{});
      rep.tag = "shift_lie";
      break;
    }
    case Regime::scalar_split: {
      rep.split = scalar_split(phi, k);
      add("phi(delta) scalar", Check{});
      add("r^(k-1) = 1", Check{});
      add(std::string("psi is an algebra ") + (rep.split->psi_kind == OrderMap::Kind::automorphism ? "automorphism" : "anti-automorphism"),
          rep.split->psi_kind == OrderMap::Kind::automorphism ? is_algebra_automorphism(rep.split->psi)
                                                               : is_algebra_anti_automorphism(rep.split->psi));
      rep.tag = to_string(rep.split->psi_kind);
      break;
    }
  }
  return rep;
}

}  // namespace incalg
