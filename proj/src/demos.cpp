#include "incalg/demos.hpp"

namespace incalg {

bool DemoReport::all_hold() const {
  for (const auto& c : claims)
    if (!c.holds) return false;
  return true;
}

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"example-3.6", "example-3.8", "z2-shift", "appendix-counterexample"};
  return names;
}

Poset example_poset() {
  return Poset::from_relations({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"1", "4"}});
}

namespace {

IncElement e(const AlgebraPtr& alg, const std::string& x, const std::string& y) {
  const auto& P = alg->poset();
  return IncElement::basis(alg, P.index_of(x), P.index_of(y));
}

IncElement e(const AlgebraPtr& alg, const std::string& x) { return e(alg, x, x); }

LinMap from_named_images(const AlgebraPtr& alg, const std::vector<std::pair<Pair, IncElement>>& images) {
  std::vector<IncElement> cols(alg->dim(), IncElement(alg));
  for (const auto& [p, img] : images) cols[alg->index(p.first, p.second)] = img;
  return LinMap::from_images(alg, cols);
}

Claim claim(std::string statement, bool holds, std::string detail = "") {
  return Claim{std::move(statement), holds, std::move(detail)};
}

Claim claim(std::string statement, const Check& c) { return Claim{std::move(statement), c.holds, c.witness}; }

AlgebraPtr two_chain(unsigned q) { return Algebra::make(Poset::chain(2), Field::finite(q)); }

DemoReport example_36() {
  const auto alg = Algebra::make(example_poset(), Field::finite(4));
  const LinMap phi = example_lie_automorphism(alg);
  DemoReport r{"example-3.6", "non-proper Lie automorphism of the 4-element poset over GF(4)", {}};
  r.claims.push_back(claim("phi is bijective", is_bijective(phi)));
  const auto pres = is_k_potent_preserver(phi, 2, PreserverMode::exhaustive);
  r.claims.push_back(claim("phi preserves idempotents (all 4^8 elements scanned)", pres.preserves,
                           std::to_string(pres.checked) + " idempotents checked" +
                               (pres.witness ? ", witness " + describe(*pres.witness) : "")));
  r.claims.push_back(claim("phi is a Lie homomorphism", is_lie_homomorphism(phi)));
  r.claims.push_back(claim("phi preserves squares", preserves_squares(phi)));
  bool idem = true;
  for (std::size_t x = 0; x < alg->n(); ++x) idem = idem && phi.image(x) * phi.image(x) == phi.image(x);
  r.claims.push_back(claim("every phi(e_x) is idempotent", idem));
  r.claims.push_back(claim("phi is not an algebra automorphism", !is_algebra_automorphism(phi)));
  r.claims.push_back(claim("phi is not an algebra anti-automorphism", !is_algebra_anti_automorphism(phi)));
  try {
    const auto rep = classify_preserver(phi, 2);
    r.claims.push_back(claim("phi classifies as a Lie automorphism", rep.tag == "lie_automorphism", rep.tag));
  } catch (const Error& err) {
    r.claims.push_back(claim("phi classifies as a Lie automorphism", false, err.what()));
  }
  return r;
}

DemoReport example_38() {
  const auto alg = two_chain(4);
  const Scalar t = alg->field().from_code(2);
  const LinMap phi = central_perturbation(alg, t);
  DemoReport r{"example-3.8", "Lie automorphism e_2 -> e_2 + t*delta of the 2-chain over GF(4)", {}};
  r.claims.push_back(claim("phi is bijective", is_bijective(phi)));
  r.claims.push_back(claim("phi is a Lie homomorphism", is_lie_homomorphism(phi)));
  const auto pres = is_k_potent_preserver(phi, 2, PreserverMode::exhaustive);
  const auto e2 = e(alg, "2");
  r.claims.push_back(claim("phi does not preserve idempotents", !pres.preserves));
  r.claims.push_back(claim("the first failing idempotent is e_2", pres.witness && *pres.witness == e2,
                           pres.witness ? describe(*pres.witness) : "none"));
  r.claims.push_back(claim("phi(e_2) is not idempotent", phi(e2) * phi(e2) != phi(e2), describe(phi(e2))));
  bool central = true;
  for (std::size_t j = 0; j < alg->dim(); ++j) central = central && is_central(phi.image(j) - IncElement::basis(alg, j));
  r.claims.push_back(claim("phi - id takes central values", central));
  return r;
}

DemoReport z2_shift_demo() {
  const auto alg = two_chain(2);
  const LinMap phi = z2_shift(alg);
  const LinMap id = LinMap::identity(alg);
  DemoReport r{"z2-shift", "shift map f -> f + f(1,2)*delta on the 2-chain over GF(2)", {}};
  r.claims.push_back(claim("phi is bijective", is_bijective(phi)));
  r.claims.push_back(claim("phi o phi = id", phi * phi == id));
  r.claims.push_back(claim("phi preserves idempotents", is_k_potent_preserver(phi, 2, PreserverMode::exhaustive).preserves));
  r.claims.push_back(claim("phi does not preserve the Jordan product", !preserves_jordan_product(phi)));
  const auto e1 = e(alg, "1"), e12 = e(alg, "1", "2");
  const auto lhs = jordan_product(phi(e1), phi(e12)), rhs = phi(jordan_product(e1, e12));
  r.claims.push_back(claim("phi(e_1) o phi(e_{1,2}) = e_{1,2} but phi(e_1 o e_{1,2}) = e_{1,2} + delta",
                           lhs == e12 && rhs == e12 + IncElement::delta(alg), describe(lhs) + " vs " + describe(rhs)));
  r.claims.push_back(claim("phi is a shift map", is_shift_map(phi)));
  try {
    const auto d = z2_decompose(phi);
    r.claims.push_back(claim("shift factor equals phi", d.factors.shift == phi));
    r.claims.push_back(claim("Lie factor is the identity", d.factors.lie_part == id));
  } catch (const Error& err) {
    r.claims.push_back(claim("shift factorization succeeds", false, err.what()));
  }
  return r;
}

DemoReport appendix_counterexample() {
  const auto alg = two_chain(2);
  const IncElement delta = IncElement::delta(alg);
  const IncElement f = delta + e(alg, "1", "2");
  DemoReport r{"appendix-counterexample", "tripotent delta + e_{1,2} over GF(2)", {}};
  r.claims.push_back(claim("f^3 = f", is_k_potent(f, 3)));
  r.claims.push_back(claim("f^2 != f", !is_k_potent(f, 2), describe(f * f)));
  try {
    conjugate_to_diagonal(f, 3);
    r.claims.push_back(claim("diagonalization refuses without a primitive square root of unity", false));
  } catch (const HypothesesNotMet& err) {
    r.claims.push_back(claim("diagonalization refuses without a primitive square root of unity", true, err.what()));
  }
  const auto elements = enumerate_k_potents(alg, 1, algebra_size(*alg));  // k = 1 lists every element
  std::size_t invertibles = 0, diagonals = 0;
  bool conjugate_found = false;
  for (const auto& s : elements) {
    const auto inv = try_inverse(s);
    if (!inv) continue;
    ++invertibles;
    diagonals = 0;
    for (const auto& d : elements) {
      if (!d.is_diagonal()) continue;
      ++diagonals;
      conjugate_found = conjugate_found || s * d * *inv == f;
    }
  }
  r.claims.push_back(claim("no invertible s and diagonal d give s d s^{-1} = f", !conjugate_found,
                           std::to_string(invertibles) + " invertibles x " + std::to_string(diagonals) +
                               " diagonals searched"));
  return r;
}

}  // namespace

LinMap example_lie_automorphism(const AlgebraPtr& alg) {
  auto i = [&](const std::string& s) { return alg->poset().index_of(s); };
  return from_named_images(alg, {
                                    {{i("1"), i("1")}, e(alg, "3") + e(alg, "4")},
                                    {{i("1"), i("2")}, e(alg, "2", "3")},
                                    {{i("1"), i("3")}, e(alg, "1", "3")},
                                    {{i("1"), i("4")}, e(alg, "1", "4")},
                                    {{i("2"), i("2")}, e(alg, "1") + e(alg, "3") + e(alg, "4")},
                                    {{i("2"), i("3")}, e(alg, "1", "2")},
                                    {{i("3"), i("3")}, e(alg, "2") + e(alg, "3")},
                                    {{i("4"), i("4")}, e(alg, "4")},
                                });
}

LinMap central_perturbation(const AlgebraPtr& alg, const Scalar& r) {
  auto i = [&](const std::string& s) { return alg->poset().index_of(s); };
  return from_named_images(alg, {
                                    {{i("1"), i("1")}, e(alg, "1")},
                                    {{i("1"), i("2")}, e(alg, "1", "2")},
                                    {{i("2"), i("2")}, e(alg, "2") + r * IncElement::delta(alg)},
                                });
}

LinMap z2_shift(const AlgebraPtr& alg) {
  const auto& P = alg->poset();
  const auto x = P.index_of("1"), y = P.index_of("2");
  const IncElement delta = IncElement::delta(alg);
  return LinMap::from_function(alg, [&](const IncElement& f) { return f + f.at(x, y) * delta; });
}

DemoReport evaluate_demo(const std::string& name) {
  if (name == "example-3.6") return example_36();
  if (name == "example-3.8") return example_38();
  if (name == "z2-shift") return z2_shift_demo();
  if (name == "appendix-counterexample") return appendix_counterexample();
  throw NotFound("unknown demo '" + name + "'");
}

DemoReport run_demo(const std::string& name) {
  DemoReport r = evaluate_demo(name);
  for (const auto& c : r.claims)
    if (!c.holds) throw ClaimFailed(name + ": " + c.statement + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  return r;
}

json to_json(const DemoReport& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    json j = {{"claim", c.statement}, {"holds", c.holds}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    claims.push_back(j);
  }
  return {{"demo", r.name}, {"description", r.description}, {"claims", claims}, {"all_hold", r.all_hold()}};
}

}  // namespace incalg
