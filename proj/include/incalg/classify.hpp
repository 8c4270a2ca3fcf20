#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incalg/linmaps.hpp"

namespace incalg {

/// phi = conj(inner_beta) o induced(order_map) o M_sigma.
struct JordanFactorization {
  IncElement inner_beta;
  OrderMap order_map;
  IncElement sigma;

  LinMap recompose() const;
};

/// phi = shift o lie_part.
struct Z2Factorization {
  LinMap shift;
  LinMap lie_part;
};

struct Z2Decomposition {
  /// beta with conj(beta)^{-1} o phi diagonal on every e_x.
  IncElement inner_beta;
  Z2Factorization factors;
};

/// phi = r * psi with r^{k-1} = 1 and psi an automorphism or anti-automorphism.
struct ScalarSplit {
  Scalar r;
  LinMap psi;
  OrderMap::Kind psi_kind;
  JordanFactorization psi_factors;
};

/// Factor a bijective Jordan automorphism of I(X,F), X connected.
/// lambda(x) is read off the diagonal of phi(e_x), beta = sum phi(e_x) e_{lambda(x)},
/// and sigma(x,y) is the (x,y) entry of (induced^{-1} o conj(beta)^{-1} o phi)(e_{xy}).
/// Throws DisconnectedPoset, NotJordanAutomorphism, LambdaNotOrderMap,
/// RecompositionMismatch.
JordanFactorization jordan_decompose(const LinMap& phi);

/// Factor a bijective idempotent preserver of I(X,GF(2)), X connected.
/// `potents` may supply P_2 to skip its enumeration.
/// Throws NotIdempotentPreserver, NotBijective, ThetaNotSingleBasisVector,
/// ThetaNotBijective, NuNotCentral, RecompositionMismatch.
Z2Decomposition z2_decompose(const LinMap& phi, const std::vector<IncElement>* potents = nullptr);

/// r = phi(delta)(x0,x0), psi = r^{k-2} phi, psi factored by jordan_decompose.
/// Needs k >= 3, char F not dividing k and a primitive (k-1)-th root of unity
/// (UnsupportedRegime otherwise). Throws PhiDeltaNotScalar,
/// RootConditionFailed, DownstreamJordanFailure, RecompositionMismatch.
ScalarSplit scalar_split(const LinMap& phi, unsigned k);

enum class Regime { jordan, char2_lie, z2, scalar_split };
const char* to_string(Regime r);
/// Throws UnsupportedRegime.
Regime regime_for(const Field& F, unsigned k);

struct Certificate {
  std::string name;
  bool holds;
  std::string detail;
};

struct ClassifyOptions {
  /// Unset: exhaustive when q^dim fits the budget, sampled otherwise.
  std::optional<PreserverMode> mode;
  const std::vector<IncElement>* potents = nullptr;
  std::uint64_t budget = kDefaultPotentBudget;
};

struct ClassificationReport {
  unsigned k;
  Regime regime;
  PreserverMode preserver_check;
  /// "automorphism", "anti_automorphism", "lie_automorphism" or "shift_lie".
  std::string tag;
  std::vector<Certificate> certificates;
  std::optional<JordanFactorization> jordan;
  std::optional<Z2Decomposition> z2;
  std::optional<ScalarSplit> split;
  std::string note;
};

/// Checks that phi is a bijective k-potent preserver, then dispatches on
/// (k, F): Jordan factorization for k = 2 outside characteristic 2, the Lie
/// automorphism certificate for characteristic 2 with |F| > 2, the shift
/// factorization over GF(2), and the scalar split for k >= 3.
/// Throws NotBijective, NotIdempotentPreserver / NotKPotentPreserver with a
/// witness, UnsupportedRegime, DisconnectedPoset and whatever the dispatched
/// routine throws.
ClassificationReport classify_preserver(const LinMap& phi, unsigned k, const ClassifyOptions& options = {});

}  // namespace incalg
