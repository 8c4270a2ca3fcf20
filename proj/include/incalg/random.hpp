#pragma once

#include <random>

#include "incalg/algebra.hpp"

namespace incalg {

/// Uniform over a finite field; small integers in [-3, 3] over Q.
Scalar random_scalar(const Field& F, std::mt19937_64& rng, bool nonzero = false);
IncElement random_element(const AlgebraPtr& alg, std::mt19937_64& rng);
/// Random element with nonzero diagonal.
IncElement random_invertible(const AlgebraPtr& alg, std::mt19937_64& rng);
/// Random multiplicative element: sigma(x,x) = 1 and
/// sigma(x,y) sigma(y,z) = sigma(x,z), built from random values on Hasse
/// edges followed by a consistency check (retried until consistent).
IncElement random_multiplicative(const AlgebraPtr& alg, std::mt19937_64& rng);

}  // namespace incalg
