#include "incalg/subspace.hpp"

namespace incalg {
namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Scalar inv = rows[r][c].inv();
    for (auto& s : rows[r]) s = s * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar m = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= m * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

void check_lengths(const std::vector<Vector>& rows, std::size_t cols) {
  for (const auto& v : rows)
    if (v.size() != cols) throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                                                  " in a space of dimension " + std::to_string(cols));
}

}  // namespace

std::vector<Vector> null_space(const Field& F, std::vector<Vector> rows, std::size_t cols) {
  check_lengths(rows, cols);
  const auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, F.zero());
    v[free] = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Field&, std::vector<Vector> rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().size()).size();
}

Subspace::Subspace(const Field& F, std::size_t ambient) : field_(&F), ambient_(ambient) {}

Subspace Subspace::span(const Field& F, std::size_t ambient, const std::vector<Vector>& vectors) {
  check_lengths(vectors, ambient);
  Subspace s(F, ambient);
  s.basis_ = vectors;
  rref(s.basis_, ambient);
  return s;
}

Subspace Subspace::full(const Field& F, std::size_t ambient) {
  std::vector<Vector> unit;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v(ambient, F.zero());
    v[i] = F.one();
    unit.push_back(std::move(v));
  }
  return span(F, ambient, unit);
}

Subspace Subspace::span_of(const std::vector<IncElement>& elements) {
  if (elements.empty()) throw DimensionMismatch("span of an empty list has no ambient space");
  std::vector<Vector> vs;
  for (const auto& e : elements) {
    elements.front().require_same(e);
    vs.push_back(e.coeffs());
  }
  return span(elements.front().algebra().field(), elements.front().dim(), vs);
}

bool Subspace::contains(const Vector& v) const {
  check_lengths({v}, ambient_);
  auto rows = basis_;
  rows.push_back(v);
  return rank(*field_, rows) == basis_.size();
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::perp() const { return span(*field_, ambient_, null_space(*field_, basis_, ambient_)); }

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch("subspaces of different ambient spaces");
  auto rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch("subspaces of different ambient spaces");
  return (a.perp() + b.perp()).perp();
}

Subspace subspace_intersection(const std::vector<Subspace>& subspaces) {
  if (subspaces.empty()) throw DimensionMismatch("intersection of no subspaces");
  Subspace acc = subspaces.front();
  for (std::size_t i = 1; i < subspaces.size(); ++i) acc = intersect(acc, subspaces[i]);
  return acc;
}

}  // namespace incalg
