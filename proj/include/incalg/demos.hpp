#pragma once

#include <string>
#include <vector>

#include "incalg/io.hpp"

namespace incalg {

struct Claim {
  std::string statement;
  bool holds;
  std::string detail;
};

struct DemoReport {
  std::string name;
  std::string description;
  std::vector<Claim> claims;

  bool all_hold() const;
};

/// "example-3.6", "example-3.8", "z2-shift", "appendix-counterexample".
const std::vector<std::string>& demo_names();

/// Rebuilds the named example and evaluates each claim about it.
/// Throws NotFound for an unknown name.
DemoReport evaluate_demo(const std::string& name);
/// As evaluate_demo, but throws ClaimFailed naming the first claim that fails.
DemoReport run_demo(const std::string& name);

/// The four-element poset 1 < 2 < 3, 1 < 4.
Poset example_poset();
/// The bijective Lie automorphism of I(example_poset(), GF(4)) with
/// e_1 -> e_3 + e_4, e_2 -> e_1 + e_3 + e_4, e_3 -> e_2 + e_3, e_4 -> e_4,
/// e_{12} -> e_{23}, e_{23} -> e_{12}, e_{13} -> e_{13}, e_{14} -> e_{14}.
LinMap example_lie_automorphism(const AlgebraPtr& alg);
/// On the 2-chain: e_1 -> e_1, e_{12} -> e_{12}, e_2 -> e_2 + r delta.
LinMap central_perturbation(const AlgebraPtr& alg, const Scalar& r);
/// On the 2-chain over GF(2): f -> f + f(1,2) delta.
LinMap z2_shift(const AlgebraPtr& alg);

json to_json(const DemoReport& r);

}  // namespace incalg
