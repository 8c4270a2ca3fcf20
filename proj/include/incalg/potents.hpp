#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "incalg/algebra.hpp"

namespace incalg {

inline constexpr std::uint64_t kDefaultPotentBudget = std::uint64_t{1} << 20;

/// q^dim, saturating at UINT64_MAX.
std::uint64_t algebra_size(const Algebra& alg);

/// The exact set P_k(I(X,F)) in increasing code order. Finite fields only;
/// throws InfiniteField, or BudgetExceeded when q^dim > budget.
std::vector<IncElement> enumerate_k_potents(const AlgebraPtr& alg, unsigned k,
                                            std::uint64_t budget = kDefaultPotentBudget, unsigned workers = 1);

/// Sampler, not exhaustive: random conjugates s d s^{-1} of diagonal d whose
/// entries are 0 or (k-1)-th roots of unity. Every returned element is a
/// k-potent.
std::vector<IncElement> sample_k_potents(const AlgebraPtr& alg, unsigned k, std::size_t count, std::mt19937_64& rng);

/// beta = sum over p in {0,1}^n of a_1^{p_1}...a_n^{p_n} e_1^{p_1}...e_n^{p_n}
/// with f^1 = f, f^0 = delta - f and e_i the diagonal of a_i. Then beta is
/// invertible, beta_D = delta and a_i = beta (a_i)_D beta^{-1}.
/// Throws NotIdempotent, NotCommuting, HypothesesNotMet for n > 20.
IncElement simultaneous_diagonalize(const std::vector<IncElement>& alphas);

struct SpectralDecomposition {
  unsigned k;
  Scalar epsilon;
  /// b_1 .. b_{k-1}
  std::vector<IncElement> idempotents;
  IncElement original;

  /// sum of epsilon^{-i} b_i
  IncElement recompose() const;
};

/// b_i = (1/(k-1)) sum_{s=1}^{k-1} epsilon^{is} a^s.
/// Throws NotKPotent, NoPrimitiveRoot.
SpectralDecomposition spectral_decompose(const IncElement& a, unsigned k);

/// sigma with f = sigma f_D sigma^{-1}, from the spectral idempotents of f
/// diagonalized simultaneously. Refuses with HypothesesNotMet when F has no
/// primitive (k-1)-th root of unity. Throws NotKPotent.
IncElement conjugate_to_diagonal(const IncElement& f, unsigned k);

/// Nonzero and not a sum of two nonzero orthogonal idempotents. Decided by
/// diagonalizing: the diagonal of e must be a single e_x. Throws NotIdempotent.
bool is_primitive_idempotent(const IncElement& e);

}  // namespace incalg
