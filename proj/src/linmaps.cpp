#include "incalg/linmaps.hpp"

#include <set>

namespace incalg {

LinMap::LinMap(AlgebraPtr alg, std::vector<Vector> columns) : alg_(std::move(alg)), columns_(std::move(columns)) {
  if (columns_.size() != alg_->dim())
    throw StructureMismatch("expected " + std::to_string(alg_->dim()) + " columns, got " +
                            std::to_string(columns_.size()));
  for (const auto& c : columns_) {
    if (c.size() != alg_->dim()) throw StructureMismatch("column length differs from the algebra dimension");
    for (const auto& s : c)
      if (&s.field() != &alg_->field()) throw FieldMismatch("matrix entry outside " + alg_->field().name());
  }
}

LinMap LinMap::from_images(const AlgebraPtr& alg, const std::vector<IncElement>& images) {
  std::vector<Vector> cols;
  for (const auto& f : images) {
    if (!alg->same_structure(f.algebra())) throw StructureMismatch("image lies in a different incidence algebra");
    cols.push_back(f.coeffs());
  }
  return LinMap(alg, std::move(cols));
}

LinMap LinMap::from_function(const AlgebraPtr& alg, const std::function<IncElement(const IncElement&)>& f) {
  std::vector<IncElement> images;
  for (std::size_t j = 0; j < alg->dim(); ++j) images.push_back(f(IncElement::basis(alg, j)));
  return from_images(alg, images);
}

LinMap LinMap::identity(const AlgebraPtr& alg) {
  return from_function(alg, [](const IncElement& f) { return f; });
}

IncElement LinMap::operator()(const IncElement& f) const {
  if (!alg_->same_structure(f.algebra())) throw StructureMismatch("argument lies in a different incidence algebra");
  Vector out(dim(), alg_->field().zero());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (f[j].is_zero()) continue;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!columns_[j][i].is_zero()) out[i] += columns_[j][i] * f[j];
  }
  return IncElement(alg_, std::move(out));
}

void LinMap::require_same(const LinMap& o) const {
  if (!alg_->same_structure(*o.alg_)) throw StructureMismatch("maps on different incidence algebras");
}

LinMap LinMap::operator*(const LinMap& o) const {
  require_same(o);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back((*this)(o.image(j)).coeffs());
  return LinMap(alg_, std::move(cols));
}

LinMap LinMap::operator+(const LinMap& o) const {
  require_same(o);
  auto cols = columns_;
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) cols[j][i] += o.columns_[j][i];
  return LinMap(alg_, std::move(cols));
}

LinMap LinMap::operator-(const LinMap& o) const {
  require_same(o);
  auto cols = columns_;
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t i = 0; i < dim(); ++i) cols[j][i] -= o.columns_[j][i];
  return LinMap(alg_, std::move(cols));
}

bool LinMap::operator==(const LinMap& o) const {
  return alg_->same_structure(*o.alg_) && columns_ == o.columns_;
}

LinMap operator*(const Scalar& r, const LinMap& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Vector c = m.column(j);
    for (auto& s : c) s = r * s;
    cols.push_back(std::move(c));
  }
  return LinMap(m.algebra_ptr(), std::move(cols));
}

std::optional<LinMap> try_invert(const LinMap& m) {
  const std::size_t d = m.dim();
  const Field& F = m.algebra().field();
  // Row-reduce [A | I].
  std::vector<Vector> rows(d, Vector(2 * d, F.zero()));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) rows[i][j] = m.entry(i, j);
    rows[i][d + i] = F.one();
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && rows[p][c].is_zero()) ++p;
    if (p == d) return std::nullopt;
    std::swap(rows[c], rows[p]);
    const Scalar inv = rows[c][c].inv();
    for (auto& s : rows[c]) s = s * inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = 0; j < 2 * d; ++j)
        if (!rows[c][j].is_zero()) rows[i][j] -= f * rows[c][j];
    }
  }
  std::vector<Vector> cols(d, Vector(d, F.zero()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) cols[j][i] = rows[i][d + j];
  return LinMap(m.algebra_ptr(), std::move(cols));
}

LinMap invert(const LinMap& m) {
  auto inv = try_invert(m);
  if (!inv) throw Singular("linear map is not bijective");
  return *std::move(inv);
}

bool is_bijective(const LinMap& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.dim(); ++j) cols.push_back(m.column(j));
  return rank(m.algebra().field(), cols) == m.dim();
}

LinMap inner(const IncElement& beta) {
  const IncElement inv = inverse(beta);
  return LinMap::from_function(beta.algebra_ptr(), [&](const IncElement& f) { return beta * f * inv; });
}

LinMap induced(const AlgebraPtr& alg, const OrderMap& lambda) {
  if (!is_order_map(alg->poset(), lambda.mapping, lambda.kind))
    throw HypothesesNotMet(std::string("mapping is not an order ") + to_string(lambda.kind));
  std::vector<IncElement> images;
  for (std::size_t j = 0; j < alg->dim(); ++j) {
    const auto [x, y] = alg->pair(j);
    images.push_back(lambda.kind == OrderMap::Kind::automorphism ? IncElement::basis(alg, lambda(x), lambda(y))
                                                                 : IncElement::basis(alg, lambda(y), lambda(x)));
  }
  return LinMap::from_images(alg, images);
}

LinMap multiplicative(const IncElement& sigma) {
  const AlgebraPtr& alg = sigma.algebra_ptr();
  std::vector<IncElement> images;
  for (std::size_t j = 0; j < alg->dim(); ++j) images.push_back(sigma[j] * IncElement::basis(alg, j));
  return LinMap::from_images(alg, images);
}

bool is_multiplicative_element(const IncElement& sigma) {
  const Algebra& alg = sigma.algebra();
  const auto& P = alg.poset();
  for (std::size_t x = 0; x < alg.n(); ++x)
    if (!sigma[x].is_one()) return false;
  for (std::size_t j = 0; j < alg.dim(); ++j)
    if (sigma[j].is_zero()) return false;
  for (const auto& [x, y] : P.strict_pairs())
    for (std::uint32_t z = x + 1; z < y; ++z)
      if (P.leq(x, z) && P.leq(z, y) && sigma.at(x, z) * sigma.at(z, y) != sigma.at(x, y)) return false;
  return true;
}

const char* to_string(PreserverMode m) { return m == PreserverMode::exhaustive ? "exhaustive" : "sampled"; }

std::string basis_name(const Algebra& alg, std::size_t j) {
  const auto [x, y] = alg.pair(j);
  const auto& P = alg.poset();
  if (x == y) return "e_" + P.label(x);
  return "e_{" + P.label(x) + "," + P.label(y) + "}";
}

std::string describe(const IncElement& f) {
  std::string out;
  for (std::size_t j = 0; j < f.dim(); ++j) {
    if (f[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!f[j].is_one()) out += f[j].to_string() + "*";
    out += basis_name(f.algebra(), j);
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------ preservation

std::vector<IncElement> preserver_witnesses(const AlgebraPtr& alg, unsigned k) {
  const Field& F = alg->field();
  const auto& P = alg->poset();
  const std::uint32_t n = static_cast<std::uint32_t>(alg->n());

  std::vector<Scalar> coefficients;
  if (F.is_finite()) {
    for (unsigned c = 1; c < F.order(); ++c) coefficients.push_back(F.from_code(c));
  } else {
    coefficients = {F.one(), F.from_int(-1), F.from_int(2), F.from_rational(mpq_class(1, 2))};
  }

  auto e = [&](std::uint32_t x, std::uint32_t y) { return IncElement::basis(alg, x, y); };
  std::vector<IncElement> candidates;
  for (std::uint32_t x = 0; x < n; ++x) candidates.push_back(e(x, x));
  candidates.push_back(IncElement::delta(alg));
  if (n <= 6)
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::uint32_t> A;
      for (std::uint32_t x = 0; x < n; ++x)
        if (mask >> x & 1u) A.push_back(x);
      candidates.push_back(IncElement::e_set(alg, A));
    }
  const auto& strict = P.strict_pairs();
  for (const auto& [x, y] : strict)
    for (const auto& r : coefficients) {
      candidates.push_back(e(x, x) + r * e(x, y));
      candidates.push_back(e(y, y) + r * e(x, y));
    }
  for (const auto& [u, v] : strict)
    for (std::uint32_t x = 0; x < n; ++x)
      if (x != u && x != v) candidates.push_back(e(x, x) + e(u, u) + e(u, v));
  for (const auto& [x, y] : strict)
    for (const auto& [a, b] : strict) {
      if (a == x && b != y) candidates.push_back(e(x, x) + e(x, y) + e(x, b));
      if (b == y && a != x) candidates.push_back(e(y, y) + e(x, y) + e(a, y));
      if (a == y) {
        candidates.push_back(e(y, y) + e(x, y) + e(y, b) + e(x, b));
      }
      if (a != x) candidates.push_back(e(x, x) + e(a, a) + e(x, y) + e(a, b));
    }

  std::vector<Scalar> roots = F.roots_of_unity(k - 1);
  std::vector<IncElement> out;
  std::set<std::string> seen;
  auto key = [](const IncElement& f) {
    std::string s;
    for (const auto& c : f.coeffs()) s += c.to_string() + ",";
    return s;
  };
  for (const auto& c : candidates) {
    if (!is_k_potent(c, k)) continue;
    for (const auto& r : roots) {
      IncElement w = r * c;
      if (seen.insert(key(w)).second) out.push_back(std::move(w));
    }
  }
  return out;
}

PreserverResult is_k_potent_preserver(const LinMap& phi, unsigned k, PreserverMode mode,
                                      const std::vector<IncElement>* potents, std::uint64_t budget) {
  std::vector<IncElement> owned;
  if (!potents) {
    owned = mode == PreserverMode::exhaustive ? enumerate_k_potents(phi.algebra_ptr(), k, budget)
                                              : preserver_witnesses(phi.algebra_ptr(), k);
    potents = &owned;
  }
  PreserverResult r{true, mode, 0, std::nullopt};
  for (const auto& p : *potents) {
    ++r.checked;
    if (!is_k_potent(phi(p), k)) {
      r.preserves = false;
      r.witness = p;
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------- identities

namespace {

std::vector<IncElement> images(const LinMap& phi) {
  std::vector<IncElement> im;
  for (std::size_t j = 0; j < phi.dim(); ++j) im.push_back(phi.image(j));
  return im;
}

std::string pair_name(const Algebra& alg, std::size_t a, std::size_t b) {
  return "(" + basis_name(alg, a) + ", " + basis_name(alg, b) + ")";
}

template <class Op>
Check bilinear_check(const LinMap& phi, Op op, bool symmetric) {
  const auto& alg = phi.algebra_ptr();
  const auto im = images(phi);
  for (std::size_t a = 0; a < phi.dim(); ++a)
    for (std::size_t b = symmetric ? a : 0; b < phi.dim(); ++b) {
      const auto ea = IncElement::basis(alg, a), eb = IncElement::basis(alg, b);
      if (phi(op(ea, eb)) != op(im[a], im[b])) return Check::fail(pair_name(*alg, a, b));
    }
  return {};
}

Check delta_fixed(const LinMap& phi) {
  const auto d = IncElement::delta(phi.algebra_ptr());
  if (phi(d) != d) return Check::fail("phi(delta) = " + describe(phi(d)));
  return {};
}

}  // namespace

Check is_lie_homomorphism(const LinMap& phi) { return bilinear_check(phi, lie_bracket, true); }

Check preserves_jordan_product(const LinMap& phi) { return bilinear_check(phi, jordan_product, true); }

Check preserves_squares(const LinMap& phi) {
  const auto& alg = phi.algebra_ptr();
  for (std::size_t j = 0; j < phi.dim(); ++j) {
    const auto b = IncElement::basis(alg, j);
    const auto pb = phi.image(j);
    if (phi(b * b) != pb * pb) return Check::fail(basis_name(*alg, j) + " squared");
  }
  return preserves_jordan_product(phi);
}

Check is_jordan_triple_homomorphism(const LinMap& phi) {
  const auto& alg = phi.algebra_ptr();
  const auto im = images(phi);
  const std::size_t d = phi.dim();
  std::vector<IncElement> e;
  for (std::size_t j = 0; j < d; ++j) e.push_back(IncElement::basis(alg, j));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (phi(e[a] * e[b] * e[a]) != im[a] * im[b] * im[a]) return Check::fail("aba at " + pair_name(*alg, a, b));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = a + 1; c < d; ++c) {
        const auto lhs = phi(e[a] * e[b] * e[c] + e[c] * e[b] * e[a]);
        const auto rhs = im[a] * im[b] * im[c] + im[c] * im[b] * im[a];
        if (lhs != rhs)
          return Check::fail("abc+cba at (" + basis_name(*alg, a) + ", " + basis_name(*alg, b) + ", " +
                             basis_name(*alg, c) + ")");
      }
  return {};
}

Check is_jordan_homomorphism(const LinMap& phi) {
  if (auto c = preserves_squares(phi); !c) return c;
  return is_jordan_triple_homomorphism(phi);
}

Check is_algebra_automorphism(const LinMap& phi) {
  if (auto c = bilinear_check(phi, [](const IncElement& a, const IncElement& b) { return a * b; }, false); !c)
    return c;
  if (!is_bijective(phi)) return Check::fail("not bijective");
  return delta_fixed(phi);
}

Check is_algebra_anti_automorphism(const LinMap& phi) {
  const auto& alg = phi.algebra_ptr();
  const auto im = images(phi);
  for (std::size_t a = 0; a < phi.dim(); ++a)
    for (std::size_t b = 0; b < phi.dim(); ++b)
      if (phi(IncElement::basis(alg, a) * IncElement::basis(alg, b)) != im[b] * im[a])
        return Check::fail(pair_name(*alg, a, b));
  if (!is_bijective(phi)) return Check::fail("not bijective");
  return delta_fixed(phi);
}

Check is_shift_map(const LinMap& phi) {
  const Algebra& alg = phi.algebra();
  if (!is_connected(alg.poset())) throw DisconnectedPoset("shift maps are defined through the center");
  for (std::size_t j = 0; j < phi.dim(); ++j) {
    const auto diff = phi.image(j) - IncElement::basis(phi.algebra_ptr(), j);
    bool scalar = diff.is_diagonal();
    for (std::size_t x = 1; x < alg.n() && scalar; ++x) scalar = diff[x] == diff[0];
    if (!scalar) return Check::fail("phi(" + basis_name(alg, j) + ") - " + basis_name(alg, j) + " = " + describe(diff));
  }
  return {};
}

}  // namespace incalg
