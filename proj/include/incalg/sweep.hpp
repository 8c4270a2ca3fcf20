#pragma once

#include <map>
#include <string>
#include <vector>

#include "incalg/classify.hpp"
#include "incalg/gl_enum.hpp"
#include "incalg/io.hpp"

namespace incalg {

enum class TheoremId { char_ne_2, char_2_big, z2, tripotent, kpotent };
/// "char-ne-2", "char-2-big", "z2", "tripotent", "kpotent".
const char* to_string(TheoremId t);
/// Throws ParseError.
TheoremId parse_theorem(std::string_view s);
/// Throws HypothesesNotMet when (F, k) is outside the theorem's regime.
void check_theorem_regime(TheoremId t, const Field& F, unsigned k);

struct SweepOptions {
  unsigned workers = 1;
  std::uint64_t budget = kDefaultSweepBudget;
  bool force = false;
  /// Failures kept in the report; the count is always exact.
  std::size_t max_failures_kept = 20;
};

struct SweepFailure {
  std::string map;
  std::string error_kind;
  std::string message;
};

struct SweepReport {
  std::string theorem;
  json poset;
  std::string field;
  unsigned k = 0;
  std::size_t dim = 0;

  std::uint64_t expected_maps = 0;
  std::uint64_t total_maps = 0;
  std::vector<std::uint64_t> maps_per_worker;
  std::uint64_t potent_count = 0;
  std::uint64_t preserver_count = 0;
  std::uint64_t classified_count = 0;
  std::map<std::string, std::uint64_t> tags;
  /// Scalar split only: how often each r occurred.
  std::map<std::string, std::uint64_t> r_values;

  std::string family;
  std::uint64_t family_size = 0;
  std::uint64_t family_found_by_sweep = 0;
  std::uint64_t family_exact_preservers = 0;
  std::uint64_t preservers_in_family = 0;
  bool converse_ok = false;

  std::uint64_t failure_count = 0;
  std::vector<SweepFailure> failures;
  double wall_time = 0;
  unsigned worker_count = 1;
  bool verified = false;
};

/// Sweeps GL(dim, q) for the instance: precomputes P_k, tests every map
/// against it with early exit, classifies every preserver exactly and checks
/// the converse by generating the classified family independently.
/// Throws BudgetExceeded (above budget without `force`), HypothesesNotMet,
/// DisconnectedPoset, InfiniteField.
SweepReport verify_theorem(const AlgebraPtr& alg, unsigned k, TheoremId theorem, const SweepOptions& options = {});

json to_json(const SweepReport& r);

}  // namespace incalg
