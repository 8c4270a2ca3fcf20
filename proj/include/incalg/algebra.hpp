#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "incalg/field.hpp"
#include "incalg/poset.hpp"

namespace incalg {

/// The structure of I(X,F): poset, field and the canonical basis order.
///
/// Basis index j < n is the diagonal pair (j, j); index n + i is
/// `poset.strict_pairs()[i]`.
class Algebra {
 public:
  static std::shared_ptr<const Algebra> make(Poset poset, const Field& field);

  const Poset& poset() const noexcept { return poset_; }
  const Field& field() const noexcept { return *field_; }
  std::size_t n() const noexcept { return poset_.size(); }
  std::size_t dim() const noexcept { return pairs_.size(); }

  /// Throws IncomparablePair unless x <= y.
  std::size_t index(std::uint32_t x, std::uint32_t y) const;
  bool has(std::uint32_t x, std::uint32_t y) const noexcept { return poset_.leq(x, y); }
  const Pair& pair(std::size_t j) const { return pairs_.at(j); }

  /// Pairs (a, b) of basis indices whose product e_a e_b is e_j.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& terms(std::size_t j) const { return terms_[j]; }
  /// Basis index of e_a e_b, or -1 when the product is zero.
  int basis_product(std::size_t a, std::size_t b) const noexcept { return product_[a * dim() + b]; }

  bool same_structure(const Algebra& o) const noexcept {
    return this == &o || (field_ == o.field_ && poset_ == o.poset_);
  }

 private:
  Algebra(Poset poset, const Field& field);

  Poset poset_;
  const Field* field_;
  std::vector<Pair> pairs_;
  std::vector<int> index_;
  std::vector<int> product_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> terms_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An element f of I(X,F), stored densely in canonical basis order. Entries
/// on incomparable pairs do not exist, so f(x,y) = 0 for x !<= y holds by
/// construction.
class IncElement {
 public:
  explicit IncElement(AlgebraPtr alg);
  IncElement(AlgebraPtr alg, std::vector<Scalar> coeffs);

  static IncElement zero(AlgebraPtr alg) { return IncElement(std::move(alg)); }
  static IncElement delta(const AlgebraPtr& alg);
  /// e_{xy}; throws IncomparablePair unless x <= y.
  static IncElement basis(const AlgebraPtr& alg, std::uint32_t x, std::uint32_t y);
  static IncElement basis(const AlgebraPtr& alg, std::size_t j);
  /// e_A = sum of e_a over a in A.
  static IncElement e_set(const AlgebraPtr& alg, const std::vector<std::uint32_t>& subset);

  const Algebra& algebra() const noexcept { return *alg_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return alg_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  const Scalar& operator[](std::size_t j) const { return coeffs_[j]; }
  void set(std::size_t j, Scalar s);
  /// f(x, y); zero for incomparable pairs.
  Scalar at(std::uint32_t x, std::uint32_t y) const;

  bool is_zero() const;
  bool is_diagonal() const;

  IncElement operator+(const IncElement& o) const;
  IncElement operator-(const IncElement& o) const;
  IncElement operator-() const;
  /// Convolution product.
  IncElement operator*(const IncElement& o) const;
  IncElement& operator+=(const IncElement& o) { return *this = *this + o; }
  IncElement& operator-=(const IncElement& o) { return *this = *this - o; }
  bool operator==(const IncElement& o) const;
  bool operator!=(const IncElement& o) const { return !(*this == o); }

  /// Throws StructureMismatch unless both live in the same I(X,F).
  void require_same(const IncElement& o) const;

 private:
  AlgebraPtr alg_;
  std::vector<Scalar> coeffs_;
};

IncElement operator*(const Scalar& r, const IncElement& f);

/// (fg)(x,y) = sum over x <= z <= y of f(x,z) g(z,y).
inline IncElement convolve(const IncElement& f, const IncElement& g) { return f * g; }
IncElement diagonal_part(const IncElement& f);
/// f lies in the Jacobson radical iff its diagonal vanishes.
inline bool in_radical(const IncElement& f) { return diagonal_part(f).is_zero(); }
/// Back-substitution along the linear extension; nullopt iff some diagonal
/// entry is zero.
std::optional<IncElement> try_inverse(const IncElement& f);
/// Throws NotInvertible.
IncElement inverse(const IncElement& f);
/// f^e for e >= 0 by repeated squaring (f^0 = delta).
IncElement power(const IncElement& f, unsigned e);
bool is_k_potent(const IncElement& f, unsigned k);
/// fg + gf
IncElement jordan_product(const IncElement& f, const IncElement& g);
/// fg - gf
IncElement lie_bracket(const IncElement& f, const IncElement& g);
/// b f b^{-1}; throws NotInvertible.
IncElement conjugate(const IncElement& f, const IncElement& b);
/// {e_x : x in X} and e_{xy} for x < y both inside or both outside A, in
/// canonical order. A basis of the centralizer of e_A.
std::vector<IncElement> centralizer_basis(const AlgebraPtr& alg, const std::vector<std::uint32_t>& subset);
/// f = r*delta for some r. Throws DisconnectedPoset. Checked both by shape and
/// by commuting with every basis element; a disagreement is an internal error.
bool is_central(const IncElement& f);

}  // namespace incalg
