#include "incalg/algebra.hpp"

namespace incalg {

Algebra::Algebra(Poset poset, const Field& field) : poset_(std::move(poset)), field_(&field) {
  const std::uint32_t n = static_cast<std::uint32_t>(poset_.size());
  for (std::uint32_t x = 0; x < n; ++x) pairs_.emplace_back(x, x);
  for (const auto& p : poset_.strict_pairs()) pairs_.push_back(p);

  index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t j = 0; j < pairs_.size(); ++j)
    index_[pairs_[j].first * n + pairs_[j].second] = static_cast<int>(j);

  const std::size_t d = pairs_.size();
  product_.assign(d * d, -1);
  terms_.resize(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const auto [x, y] = pairs_[a];
      const auto [u, v] = pairs_[b];
      if (y != u) continue;
      const int c = index_[x * n + v];
      product_[a * d + b] = c;
      terms_[static_cast<std::size_t>(c)].emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
}

std::shared_ptr<const Algebra> Algebra::make(Poset poset, const Field& field) {
  return std::shared_ptr<const Algebra>(new Algebra(std::move(poset), field));
}

std::size_t Algebra::index(std::uint32_t x, std::uint32_t y) const {
  if (x >= n() || y >= n() || index_[x * n() + y] < 0)
    throw IncomparablePair("(" + poset_.label(x) + ", " + poset_.label(y) + ") is not a pair x <= y");
  return static_cast<std::size_t>(index_[x * n() + y]);
}

// ---------------------------------------------------------------- IncElement

IncElement::IncElement(AlgebraPtr alg) : alg_(std::move(alg)), coeffs_(alg_->dim(), alg_->field().zero()) {}

IncElement::IncElement(AlgebraPtr alg, std::vector<Scalar> coeffs) : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != alg_->dim())
    throw StructureMismatch("expected " + std::to_string(alg_->dim()) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
  for (const auto& c : coeffs_)
    if (&c.field() != &alg_->field()) throw FieldMismatch("coefficient outside " + alg_->field().name());
}

IncElement IncElement::delta(const AlgebraPtr& alg) {
  IncElement f(alg);
  for (std::size_t x = 0; x < alg->n(); ++x) f.coeffs_[x] = alg->field().one();
  return f;
}

IncElement IncElement::basis(const AlgebraPtr& alg, std::uint32_t x, std::uint32_t y) {
  return basis(alg, alg->index(x, y));
}

IncElement IncElement::basis(const AlgebraPtr& alg, std::size_t j) {
  IncElement f(alg);
  f.coeffs_.at(j) = alg->field().one();
  return f;
}

IncElement IncElement::e_set(const AlgebraPtr& alg, const std::vector<std::uint32_t>& subset) {
  IncElement f(alg);
  for (auto a : subset) f.coeffs_[alg->index(a, a)] = alg->field().one();
  return f;
}

void IncElement::set(std::size_t j, Scalar s) {
  if (&s.field() != &alg_->field()) throw FieldMismatch("coefficient outside " + alg_->field().name());
  coeffs_.at(j) = std::move(s);
}

Scalar IncElement::at(std::uint32_t x, std::uint32_t y) const {
  if (!alg_->has(x, y)) return alg_->field().zero();
  return coeffs_[alg_->index(x, y)];
}

bool IncElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool IncElement::is_diagonal() const {
  for (std::size_t j = alg_->n(); j < dim(); ++j)
    if (!coeffs_[j].is_zero()) return false;
  return true;
}

void IncElement::require_same(const IncElement& o) const {
  if (!alg_->same_structure(*o.alg_)) throw StructureMismatch("elements of different incidence algebras");
}

IncElement IncElement::operator+(const IncElement& o) const {
  require_same(o);
  IncElement r(*this);
  for (std::size_t j = 0; j < dim(); ++j) r.coeffs_[j] += o.coeffs_[j];
  return r;
}

IncElement IncElement::operator-(const IncElement& o) const {
  require_same(o);
  IncElement r(*this);
  for (std::size_t j = 0; j < dim(); ++j) r.coeffs_[j] -= o.coeffs_[j];
  return r;
}

IncElement IncElement::operator-() const {
  IncElement r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IncElement IncElement::operator*(const IncElement& o) const {
  require_same(o);
  IncElement r(alg_);
  for (std::size_t j = 0; j < dim(); ++j) {
    Scalar acc = alg_->field().zero();
    for (const auto& [a, b] : alg_->terms(j))
      if (!coeffs_[a].is_zero() && !o.coeffs_[b].is_zero()) acc += coeffs_[a] * o.coeffs_[b];
    r.coeffs_[j] = std::move(acc);
  }
  return r;
}

bool IncElement::operator==(const IncElement& o) const {
  return alg_->same_structure(*o.alg_) && coeffs_ == o.coeffs_;
}

IncElement operator*(const Scalar& r, const IncElement& f) {
  std::vector<Scalar> c = f.coeffs();
  for (auto& s : c) s = r * s;
  return IncElement(f.algebra_ptr(), std::move(c));
}

IncElement diagonal_part(const IncElement& f) {
  IncElement d(f.algebra_ptr());
  for (std::size_t x = 0; x < f.algebra().n(); ++x) d.set(x, f[x]);
  return d;
}

std::optional<IncElement> try_inverse(const IncElement& f) {
  const Algebra& alg = f.algebra();
  const std::uint32_t n = static_cast<std::uint32_t>(alg.n());
  for (std::uint32_t x = 0; x < n; ++x)
    if (f[x].is_zero()) return std::nullopt;

  // g(x,x) = f(x,x)^{-1};  g(x,y) = -f(x,x)^{-1} sum_{x<z<=y} f(x,z) g(z,y).
  // Rows are filled from the top of the linear extension down so every g(z,y)
  // with z > x is already known.
  IncElement g(f.algebra_ptr());
  std::vector<Scalar> gc(alg.dim(), alg.field().zero());
  for (std::uint32_t x = n; x-- > 0;) {
    const Scalar inv_xx = f[x].inv();
    gc[x] = inv_xx;
    for (std::uint32_t y = x + 1; y < n; ++y) {
      if (!alg.has(x, y)) continue;
      Scalar acc = alg.field().zero();
      for (std::uint32_t z = x + 1; z <= y; ++z)
        if (alg.has(x, z) && alg.has(z, y)) acc += f[alg.index(x, z)] * gc[alg.index(z, y)];
      gc[alg.index(x, y)] = -(inv_xx * acc);
    }
  }
  return IncElement(f.algebra_ptr(), std::move(gc));
}

IncElement inverse(const IncElement& f) {
  auto g = try_inverse(f);
  if (!g) throw NotInvertible("element has a zero diagonal entry");
  return *std::move(g);
}

IncElement power(const IncElement& f, unsigned e) {
  IncElement result = IncElement::delta(f.algebra_ptr()), base = f;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool is_k_potent(const IncElement& f, unsigned k) { return power(f, k) == f; }

IncElement jordan_product(const IncElement& f, const IncElement& g) { return f * g + g * f; }

IncElement lie_bracket(const IncElement& f, const IncElement& g) { return f * g - g * f; }

IncElement conjugate(const IncElement& f, const IncElement& b) { return b * f * inverse(b); }

std::vector<IncElement> centralizer_basis(const AlgebraPtr& alg, const std::vector<std::uint32_t>& subset) {
  std::vector<bool> in(alg->n(), false);
  for (auto a : subset) in.at(a) = true;
  std::vector<IncElement> out;
  for (std::size_t j = 0; j < alg->dim(); ++j) {
    const auto [x, y] = alg->pair(j);
    if (x == y || in[x] == in[y]) out.push_back(IncElement::basis(alg, j));
  }
  return out;
}

bool is_central(const IncElement& f) {
  const Algebra& alg = f.algebra();
  if (!is_connected(alg.poset())) throw DisconnectedPoset("the center is only the scalars on connected posets");
  bool by_shape = f.is_diagonal();
  for (std::size_t x = 1; x < alg.n() && by_shape; ++x) by_shape = f[x] == f[0];
  bool by_commuting = true;
  for (std::size_t j = 0; j < alg.dim() && by_commuting; ++j) {
    const auto b = IncElement::basis(f.algebra_ptr(), j);
    by_commuting = f * b == b * f;
  }
  if (by_shape != by_commuting)
    throw CertificateFailed("scalar shape and commutation test disagree on centrality");
  return by_shape;
}

}  // namespace incalg
