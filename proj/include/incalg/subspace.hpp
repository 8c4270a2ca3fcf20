#pragma once

#include <vector>

#include "incalg/algebra.hpp"

namespace incalg {

using Vector = std::vector<Scalar>;

/// Basis of {v : A v = 0} for the rows of A (each of length `cols`), in
/// the order of the free columns.
std::vector<Vector> null_space(const Field& F, std::vector<Vector> rows, std::size_t cols);
/// Rank by row reduction.
std::size_t rank(const Field& F, std::vector<Vector> rows);

/// A subspace of F^n kept as its reduced row echelon basis, so equal
/// subspaces have identical bases.
class Subspace {
 public:
  Subspace(const Field& F, std::size_t ambient);

  static Subspace span(const Field& F, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace full(const Field& F, std::size_t ambient);
  /// Span of coefficient vectors; `elements` must be nonempty.
  static Subspace span_of(const std::vector<IncElement>& elements);

  const Field& field() const noexcept { return *field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;
  /// Annihilator under the standard bilinear form.
  Subspace perp() const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  const Field* field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

/// Sum of subspaces. Throws DimensionMismatch.
Subspace operator+(const Subspace& a, const Subspace& b);
/// Intersection as a kernel computation. Throws DimensionMismatch.
Subspace intersect(const Subspace& a, const Subspace& b);
/// Iterated intersection; the list must be nonempty.
Subspace subspace_intersection(const std::vector<Subspace>& subspaces);

}  // namespace incalg
