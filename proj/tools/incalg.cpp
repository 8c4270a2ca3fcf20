#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "incalg/demos.hpp"
#include "incalg/sweep.hpp"

using namespace incalg;

namespace {

enum Exit { kOk = 0, kViolated = 1, kUsage = 2 };

struct Instance {
  std::string poset;
  std::string field;
  unsigned k = 2;
};

void add_instance(CLI::App* cmd, Instance& in) {
  cmd->add_option("--poset", in.poset, "poset file (text or JSON)")->required();
  cmd->add_option("--field", in.field, "field order q or Q")->required();
  cmd->add_option("--k", in.k, "potency k >= 2")->check(CLI::Range(2u, 64u));
}

AlgebraPtr load_algebra(const Instance& in) { return Algebra::make(load_poset(in.poset), Field::parse(in.field)); }

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

json error_json(const Error& e) { return {{"ok", false}, {"error", e.kind()}, {"message", e.what()}}; }

/// Usage and resource errors exit with 2; everything else is a failed claim.
int exit_code_for(const Error& e) {
  static const std::vector<std::string> usage{"ParseError", "NotFound", "UnknownLabel", "CycleError",
                                              "EmptyPoset", "UnsupportedField", "BudgetExceeded",
                                              "InfiniteField", "FieldMismatch", "DimensionMismatch",
                                              "IncomparablePair", "HypothesesNotMet", "UnsupportedRegime",
                                              "DisconnectedPoset"};
  for (const auto& u : usage)
    if (e.kind() == u) return kUsage;
  return kViolated;
}

int cmd_verify(const Instance& in, const std::string& theorem, const SweepOptions& opt) {
  const auto alg = load_algebra(in);
  const SweepReport r = verify_theorem(alg, in.k, parse_theorem(theorem), opt);
  json j = to_json(r);
  j["ok"] = r.verified;
  emit(j);
  return r.verified ? kOk : kViolated;
}

int cmd_decompose(const Instance& in, const std::string& map_file, std::uint64_t budget) {
  const auto alg = load_algebra(in);
  const LinMap phi = parse_linmap(alg, read_file(map_file));
  ClassifyOptions opt;
  opt.budget = budget;
  try {
    const auto report = classify_preserver(phi, in.k, opt);
    json j = to_json(report);
    j["ok"] = true;
    emit(j);
    return kOk;
  } catch (const NotPreserverError& e) {
    json j = error_json(e);
    j["regime"] = to_string(regime_for(alg->field(), in.k));
    emit(j);
    return kViolated;
  }
}

int cmd_spectral(const Instance& in, const std::string& element_file) {
  const auto alg = load_algebra(in);
  const IncElement f = parse_element(alg, read_file(element_file));
  const SpectralDecomposition d = spectral_decompose(f, in.k);
  json j = to_json(d);
  j["ok"] = d.recompose() == f;
  json text = json::array();
  for (const auto& b : d.idempotents) text.push_back(format_element(b));
  j["idempotents_text"] = text;
  try {
    const IncElement s = conjugate_to_diagonal(f, in.k);
    j["conjugator"] = element_json(s);
  } catch (const HypothesesNotMet& e) {
    j["conjugator_error"] = e.what();
  }
  emit(j);
  return j["ok"].get<bool>() ? kOk : kViolated;
}

int cmd_enumerate(const Instance& in, std::uint64_t budget, unsigned workers, bool count_only) {
  const auto alg = load_algebra(in);
  const auto potents = enumerate_k_potents(alg, in.k, budget, workers);
  json j = {{"ok", true}, {"field", alg->field().name()}, {"k", in.k}, {"count", potents.size()}};
  if (!count_only) {
    json list = json::array();
    for (const auto& p : potents) list.push_back(element_json(p));
    j["potents"] = list;
  }
  emit(j);
  return kOk;
}

int cmd_demo(const std::string& name) {
  const std::vector<std::string> names = name == "all" ? demo_names() : std::vector<std::string>{name};
  json out = json::array();
  bool ok = true;
  for (const auto& n : names) {
    const DemoReport r = evaluate_demo(n);
    ok = ok && r.all_hold();
    out.push_back(to_json(r));
  }
  emit(names.size() == 1 ? out[0] : json{{"ok", ok}, {"demos", out}});
  return ok ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"incalg: incidence algebras over small fields and their potent preservers"};
  app.require_subcommand(1);

  Instance inst;
  SweepOptions sweep;
  std::string theorem, map_file, element_file, demo_name;
  std::uint64_t budget = kDefaultPotentBudget;
  bool count_only = false;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  sweep.workers = hw;

  auto* verify = app.add_subcommand("verify", "exhaustively verify a classification theorem on one instance");
  add_instance(verify, inst);
  verify->add_option("--theorem", theorem, "char-ne-2 | char-2-big | z2 | tripotent | kpotent")->required();
  verify->add_option("--workers", sweep.workers, "worker threads")->check(CLI::Range(1u, 1024u));
  verify->add_option("--budget", sweep.budget, "largest sweep run without --force");
  verify->add_flag("--force", sweep.force, "run sweeps above the budget");

  auto* decompose = app.add_subcommand("decompose", "classify one map and print its factors");
  add_instance(decompose, inst);
  decompose->add_option("--map", map_file, "map file")->required();
  decompose->add_option("--budget", budget, "largest algebra scanned exhaustively");

  auto* spectral = app.add_subcommand("spectral", "spectral decomposition of one k-potent");
  add_instance(spectral, inst);
  spectral->add_option("--element", element_file, "element file")->required();

  auto* enumerate = app.add_subcommand("enumerate-potents", "list every k-potent");
  add_instance(enumerate, inst);
  enumerate->add_option("--budget", budget, "largest algebra scanned");
  enumerate->add_option("--workers", sweep.workers, "worker threads")->check(CLI::Range(1u, 1024u));
  enumerate->add_flag("--count-only", count_only, "print only the number of k-potents");

  auto* demo = app.add_subcommand("demo", "rebuild a worked example and check its claims");
  demo->add_option("name", demo_name, "example-3.6 | example-3.8 | z2-shift | appendix-counterexample | all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(inst, theorem, sweep);
    if (*decompose) return cmd_decompose(inst, map_file, budget);
    if (*spectral) return cmd_spectral(inst, element_file);
    if (*enumerate) return cmd_enumerate(inst, budget, sweep.workers, count_only);
    if (*demo) return cmd_demo(demo_name);
  } catch (const Error& e) {
    emit(error_json(e));
    return exit_code_for(e);
  } catch (const std::exception& e) {
    emit({{"ok", false}, {"error", "Exception"}, {"message", e.what()}});
    return kUsage;
  }
  return kUsage;
}
