#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "incalg/algebra.hpp"
#include "incalg/potents.hpp"
#include "incalg/subspace.hpp"

namespace incalg {

/// Linear endomorphism of I(X,F). Column j holds the coefficients of the
/// image of the j-th canonical basis element.
class LinMap {
 public:
  LinMap(AlgebraPtr alg, std::vector<Vector> columns);

  static LinMap from_images(const AlgebraPtr& alg, const std::vector<IncElement>& images);
  /// Tabulates `f` on the canonical basis.
  static LinMap from_function(const AlgebraPtr& alg, const std::function<IncElement(const IncElement&)>& f);
  static LinMap identity(const AlgebraPtr& alg);

  const Algebra& algebra() const noexcept { return *alg_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return alg_; }
  std::size_t dim() const noexcept { return columns_.size(); }

  const Vector& column(std::size_t j) const { return columns_.at(j); }
  const Scalar& entry(std::size_t i, std::size_t j) const { return columns_.at(j).at(i); }
  IncElement image(std::size_t j) const { return IncElement(alg_, columns_.at(j)); }
  IncElement operator()(const IncElement& f) const;

  /// this after o
  LinMap operator*(const LinMap& o) const;
  LinMap operator+(const LinMap& o) const;
  LinMap operator-(const LinMap& o) const;
  bool operator==(const LinMap& o) const;
  bool operator!=(const LinMap& o) const { return !(*this == o); }

  void require_same(const LinMap& o) const;

 private:
  AlgebraPtr alg_;
  std::vector<Vector> columns_;
};

LinMap operator*(const Scalar& r, const LinMap& m);
inline IncElement apply(const LinMap& m, const IncElement& f) { return m(f); }
inline LinMap compose(const LinMap& a, const LinMap& b) { return a * b; }

std::optional<LinMap> try_invert(const LinMap& m);
/// Throws Singular.
LinMap invert(const LinMap& m);
bool is_bijective(const LinMap& m);

/// f -> beta f beta^{-1}. Throws NotInvertible.
LinMap inner(const IncElement& beta);
/// The map e_{xy} -> e_{l(x) l(y)} for an automorphism l, or
/// e_{xy} -> e_{l(y) l(x)} for an anti-automorphism.
LinMap induced(const AlgebraPtr& alg, const OrderMap& lambda);
/// M_sigma: e_{xy} -> sigma(x,y) e_{xy}.
LinMap multiplicative(const IncElement& sigma);
/// sigma(x,x) = 1, nonzero on all pairs, sigma(x,y) sigma(y,z) = sigma(x,z).
bool is_multiplicative_element(const IncElement& sigma);

/// Outcome of a predicate, carrying a witness description when it fails.
struct Check {
  bool holds = true;
  std::string witness;

  explicit operator bool() const noexcept { return holds; }
  static Check fail(std::string w) { return Check{false, std::move(w)}; }
};

enum class PreserverMode { exhaustive, sampled };
const char* to_string(PreserverMode m);

struct PreserverResult {
  bool preserves = true;
  PreserverMode mode;
  /// Number of k-potents whose image was tested.
  std::size_t checked = 0;
  /// First k-potent whose image is not a k-potent.
  std::optional<IncElement> witness;

  explicit operator bool() const noexcept { return preserves; }
};

/// k-potents built from basis elements as in the standard witness families:
/// e_A (small X), e_x + r e_{xy}, e_y + r e_{xy}, e_x + e_u + e_{uv},
/// e_x + e_{xy} + e_{xv}, e_y + e_{xy} + e_{uy}, e_y + e_{xy} + e_{yv} + e_{xv},
/// e_x + e_u + e_{xy} + e_{uv}, each also scaled by every (k-1)-th root of
/// unity. Only genuine k-potents are kept.
std::vector<IncElement> preserver_witnesses(const AlgebraPtr& alg, unsigned k);

/// Exhaustive mode tests the image of every k-potent (enumerated under
/// `budget` unless `potents` is supplied) and is exact. Sampled mode tests only
/// `preserver_witnesses` and is necessary, not sufficient.
PreserverResult is_k_potent_preserver(const LinMap& phi, unsigned k, PreserverMode mode,
                                      const std::vector<IncElement>* potents = nullptr,
                                      std::uint64_t budget = kDefaultPotentBudget);

/// phi([a,b]) = [phi(a), phi(b)] on basis pairs.
Check is_lie_homomorphism(const LinMap& phi);
/// phi(a o b) = phi(a) o phi(b) on basis pairs. Same as the Lie test in
/// characteristic 2.
Check preserves_jordan_product(const LinMap& phi);
/// phi(b^2) = phi(b)^2 on basis elements and the Jordan product on basis pairs.
Check preserves_squares(const LinMap& phi);
/// phi(aba) = phi(a)phi(b)phi(a) on basis pairs and
/// phi(abc + cba) = phi(a)phi(b)phi(c) + phi(c)phi(b)phi(a) on basis triples.
Check is_jordan_triple_homomorphism(const LinMap& phi);
/// Jordan product, squares and triple products.
Check is_jordan_homomorphism(const LinMap& phi);
/// Multiplicative on basis pairs, bijective, phi(delta) = delta.
Check is_algebra_automorphism(const LinMap& phi);
/// phi(ab) = phi(b)phi(a) on basis pairs, bijective, phi(delta) = delta.
Check is_algebra_anti_automorphism(const LinMap& phi);
/// phi(f) - f is a multiple of delta for every f. Throws DisconnectedPoset.
Check is_shift_map(const LinMap& phi);

/// Human-readable name of basis element j, e.g. "e_2" or "e_{1,3}".
std::string basis_name(const Algebra& alg, std::size_t j);
/// Short text form of an element, e.g. "e_1 + t*e_{1,2}" style terms.
std::string describe(const IncElement& f);

}  // namespace incalg
