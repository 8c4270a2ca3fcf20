#include "incalg/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <thread>

namespace incalg {

const char* to_string(TheoremId t) {
  switch (t) {
    case TheoremId::char_ne_2: return "char-ne-2";
    case TheoremId::char_2_big: return "char-2-big";
    case TheoremId::z2: return "z2";
    case TheoremId::tripotent: return "tripotent";
    case TheoremId::kpotent: return "kpotent";
  }
  return "?";
}

TheoremId parse_theorem(std::string_view s) {
  for (auto t : {TheoremId::char_ne_2, TheoremId::char_2_big, TheoremId::z2, TheoremId::tripotent, TheoremId::kpotent})
    if (s == to_string(t)) return t;
  throw ParseError("unknown theorem '" + std::string(s) + "'");
}

void check_theorem_regime(TheoremId t, const Field& F, unsigned k) {
  if (!F.is_finite()) throw InfiniteField("sweeps need a finite field");
  const unsigned p = F.characteristic(), q = F.order();
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw HypothesesNotMet(std::string(to_string(t)) + " needs " + what);
  };
  switch (t) {
    case TheoremId::char_ne_2: need(k == 2 && p != 2, "k = 2 and characteristic other than 2"); break;
    case TheoremId::char_2_big: need(k == 2 && p == 2 && q > 2, "k = 2, characteristic 2 and q > 2"); break;
    case TheoremId::z2: need(k == 2 && q == 2, "k = 2 over GF(2)"); break;
    case TheoremId::tripotent: need(k == 3 && p != 2 && p != 3, "k = 3 and characteristic outside {2, 3}"); break;
    case TheoremId::kpotent:
      need(k >= 3, "k >= 3");
      try {
        regime_for(F, k);
      } catch (const UnsupportedRegime& e) {
        need(false, e.what());
      }
      break;
  }
}

namespace {

template <class Fn>
void run_workers(unsigned workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&fn, w] { fn(w); });
  for (auto& t : pool) t.join();
}

using Cols = std::vector<Code>;

Cols compose(const CodedSpace& s, const Cols& a, const Cols& b) {
  const CodedMap A(s, a.data());
  Cols out(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) out[j] = A(b[j]);
  return out;
}

LinMap decode_map(const CodedAlgebra& ca, const Code* cols) {
  std::vector<IncElement> images;
  for (std::size_t j = 0; j < ca.dim(); ++j) images.push_back(ca.decode(cols[j]));
  return LinMap::from_images(ca.algebra(), images);
}

// Codes whose diagonal digits are all nonzero.
std::vector<Code> invertible_codes(const CodedAlgebra& ca) {
  std::vector<Code> out;
  const std::size_t n = ca.algebra()->n();
  for (std::uint64_t c = 0; c < ca.size(); ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = ca.digit(static_cast<Code>(c), x) != 0;
    if (ok) out.push_back(static_cast<Code>(c));
  }
  return out;
}

std::vector<Code> multiplicative_codes(const CodedAlgebra& ca) {
  std::vector<Code> out;
  const Algebra& alg = *ca.algebra();
  const std::size_t n = alg.n();
  for (std::uint64_t c = 0; c < ca.size(); ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < ca.dim() && ok; ++j) {
      const auto d = ca.digit(static_cast<Code>(c), j);
      ok = j < n ? d == 1 : d != 0;
    }
    if (ok && is_multiplicative_element(ca.decode(static_cast<Code>(c)))) out.push_back(static_cast<Code>(c));
  }
  return out;
}

// All r^{k-1} = 1 times conj(beta) o induced(lambda) o M_sigma.
std::vector<std::uint64_t> jordan_family(const CodedAlgebra& ca, unsigned k) {
  const AlgebraPtr& alg = ca.algebra();
  const std::size_t d = ca.dim();
  std::vector<Cols> inner_maps, order_maps, mult_maps;
  for (Code b : invertible_codes(ca)) {
    const Code binv = ca.encode(inverse(ca.decode(b)));
    Cols cols(d);
    for (std::size_t j = 0; j < d; ++j) cols[j] = ca.mul(ca.mul(b, ca.unit(j)), binv);
    inner_maps.push_back(std::move(cols));
  }
  for (const auto& lam : enumerate_order_maps(alg->poset())) {
    Cols cols(d);
    for (std::size_t j = 0; j < d; ++j) {
      const auto [x, y] = alg->pair(j);
      cols[j] = ca.unit(lam.kind == OrderMap::Kind::automorphism ? alg->index(lam(x), lam(y))
                                                                  : alg->index(lam(y), lam(x)));
    }
    order_maps.push_back(std::move(cols));
  }
  for (Code s : multiplicative_codes(ca)) {
    Cols cols(d);
    for (std::size_t j = 0; j < d; ++j) cols[j] = ca.scale(ca.digit(s, j), ca.unit(j));
    mult_maps.push_back(std::move(cols));
  }
  std::vector<std::uint8_t> roots;
  for (const auto& r : ca.field().roots_of_unity(k - 1)) roots.push_back(static_cast<std::uint8_t>(r.code()));

  std::vector<std::uint64_t> keys;
  for (const auto& I : inner_maps)
    for (const auto& L : order_maps) {
      const Cols IL = compose(ca, I, L);
      for (const auto& S : mult_maps) {
        Cols m = compose(ca, IL, S);
        for (auto r : roots) {
          Cols rm(d);
          for (std::size_t j = 0; j < d; ++j) rm[j] = ca.scale(r, m[j]);
          keys.push_back(pack_columns(ca, rm.data()));
        }
      }
    }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

// All tau o psi with psi a Lie automorphism and tau = id + c(.) delta bijective.
std::vector<std::uint64_t> shift_lie_family(const CodedAlgebra& ca, const std::vector<std::uint64_t>& lie) {
  const Field& F = ca.field();
  const std::size_t d = ca.dim(), n = ca.algebra()->n();
  const Code delta = ca.delta();
  std::vector<std::uint64_t> keys;
  std::vector<std::uint8_t> c(d);
  for (std::uint64_t cc = 0; cc < ca.size(); ++cc) {
    ca.to_digits(static_cast<Code>(cc), c.data());
    std::uint8_t c_delta = 0;
    for (std::size_t x = 0; x < n; ++x) c_delta = F.add_code(c_delta, c[x]);
    if (F.add_code(1, c_delta) == 0) continue;
    auto functional = [&](Code v) {
      std::uint8_t s = 0;
      for (std::size_t j = 0; j < d; ++j) s = F.add_code(s, F.mul_code(c[j], ca.digit(v, j)));
      return s;
    };
    for (std::uint64_t key : lie) {
      Cols cols = unpack_columns(ca, key);
      for (auto& col : cols) col = ca.add(col, ca.scale(functional(col), delta));
      keys.push_back(pack_columns(ca, cols.data()));
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace

SweepReport verify_theorem(const AlgebraPtr& alg, unsigned k, TheoremId theorem, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  check_theorem_regime(theorem, alg->field(), k);
  if (!is_connected(alg->poset())) throw DisconnectedPoset("theorems are stated for connected posets");
  const unsigned workers = std::max(1u, options.workers);

  const CodedAlgebra ca(alg);
  require_packable(ca);

  SweepReport rep;
  rep.theorem = to_string(theorem);
  rep.poset = poset_json(alg->poset());
  rep.field = alg->field().name();
  rep.k = k;
  rep.dim = ca.dim();
  rep.worker_count = workers;
  rep.expected_maps = gl_order(ca.dim(), ca.q());
  if (rep.expected_maps > options.budget && !options.force)
    throw BudgetExceeded("sweep of " + std::to_string(rep.expected_maps) + " maps exceeds the budget of " +
                         std::to_string(options.budget) + " (use --force)");

  const std::vector<Code> potent_codes = coded_k_potents(ca, k, workers);
  const PotentIndex index(ca, potent_codes);
  rep.potent_count = potent_codes.size();
  std::vector<IncElement> potents;
  for (Code c : potent_codes) potents.push_back(ca.decode(c));

  // Sweep.
  const bool want_lie = theorem == TheoremId::z2 || theorem == TheoremId::char_2_big;
  const bool lie_needs_idempotents = theorem == TheoremId::char_2_big;
  const std::size_t n = alg->n();
  std::vector<std::vector<std::uint64_t>> pres(workers), lie(workers);
  rep.maps_per_worker.assign(workers, 0);
  run_workers(workers, [&](unsigned w) {
    const auto [b, e] = gl_partition(ca, w, workers);
    std::uint64_t count = 0;
    for_each_gl(ca, b, e, [&](const Code* cols) {
      ++count;
      const CodedMap m(ca, cols);
      if (index.preserved_by(m)) pres[w].push_back(pack_columns(ca, cols));
      if (want_lie && coded_is_lie_homomorphism(ca, m)) {
        bool ok = true;
        for (std::size_t x = 0; x < n && lie_needs_idempotents && ok; ++x) ok = ca.is_k_potent(cols[x], 2);
        if (ok) lie[w].push_back(pack_columns(ca, cols));
      }
    });
    rep.maps_per_worker[w] = count;
  });
  std::vector<std::uint64_t> preservers, lie_maps;
  for (unsigned w = 0; w < workers; ++w) {
    rep.total_maps += rep.maps_per_worker[w];
    preservers.insert(preservers.end(), pres[w].begin(), pres[w].end());
    lie_maps.insert(lie_maps.end(), lie[w].begin(), lie[w].end());
  }
  std::sort(preservers.begin(), preservers.end());
  std::sort(lie_maps.begin(), lie_maps.end());
  rep.preserver_count = preservers.size();

  // Exact classification of every preserver.
  struct Partial {
    std::uint64_t classified = 0;
    std::map<std::string, std::uint64_t> tags, r_values;
    std::vector<std::pair<std::size_t, SweepFailure>> failures;
  };
  std::vector<Partial> parts(workers);
  ClassifyOptions copts;
  copts.mode = PreserverMode::exhaustive;
  copts.potents = &potents;
  run_workers(workers, [&](unsigned w) {
    Partial& part = parts[w];
    for (std::size_t i = w; i < preservers.size(); i += workers) {
      const auto cols = unpack_columns(ca, preservers[i]);
      const LinMap phi = decode_map(ca, cols.data());
      try {
        const auto r = classify_preserver(phi, k, copts);
        ++part.classified;
        ++part.tags[r.tag];
        if (r.split) ++part.r_values[r.split->r.to_string()];
      } catch (const Error& e) {
        part.failures.push_back({i, SweepFailure{format_linmap(phi), e.kind(), e.what()}});
      }
    }
  });
  std::vector<std::pair<std::size_t, SweepFailure>> failures;
  for (auto& part : parts) {
    rep.classified_count += part.classified;
    for (const auto& [t, c] : part.tags) rep.tags[t] += c;
    for (const auto& [r, c] : part.r_values) rep.r_values[r] += c;
    for (auto& f : part.failures) failures.push_back(std::move(f));
  }
  std::sort(failures.begin(), failures.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  rep.failure_count = failures.size();
  for (std::size_t i = 0; i < failures.size() && i < options.max_failures_kept; ++i)
    rep.failures.push_back(failures[i].second);

  // Converse: the classified family, generated without the preserver test.
  std::vector<std::uint64_t> family;
  switch (theorem) {
    case TheoremId::char_ne_2:
    case TheoremId::tripotent:
    case TheoremId::kpotent:
      rep.family = "r * conj(beta) o lambda o M_sigma with r^(k-1) = 1";
      family = jordan_family(ca, k);
      break;
    case TheoremId::char_2_big:
      rep.family = "Lie automorphisms with every phi(e_x) idempotent";
      family = lie_maps;
      break;
    case TheoremId::z2:
      rep.family = "bijective shift map o Lie automorphism";
      family = shift_lie_family(ca, lie_maps);
      break;
  }
  rep.family_size = family.size();
  std::vector<std::uint64_t> common;
  std::set_intersection(family.begin(), family.end(), preservers.begin(), preservers.end(), std::back_inserter(common));
  rep.family_found_by_sweep = common.size();
  rep.preservers_in_family = common.size();

  std::vector<std::uint64_t> exact_ok(workers, 0);
  run_workers(workers, [&](unsigned w) {
    for (std::size_t i = w; i < family.size(); i += workers) {
      const auto cols = unpack_columns(ca, family[i]);
      const LinMap phi = decode_map(ca, cols.data());
      if (is_bijective(phi) && is_k_potent_preserver(phi, k, PreserverMode::exhaustive, &potents)) ++exact_ok[w];
    }
  });
  for (auto c : exact_ok) rep.family_exact_preservers += c;
  rep.converse_ok = family == preservers && rep.family_exact_preservers == rep.family_size;

  rep.verified = rep.failure_count == 0 && rep.classified_count == rep.preserver_count && rep.converse_ok &&
                 rep.total_maps == rep.expected_maps;
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

json to_json(const SweepReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"map", f.map}, {"error", f.error_kind}, {"message", f.message}});
  return {{"theorem", r.theorem},
          {"instance", {{"poset", r.poset}, {"field", r.field}, {"k", r.k}, {"dim", r.dim}}},
          {"expected_maps", r.expected_maps},
          {"total_maps", r.total_maps},
          {"maps_per_worker", r.maps_per_worker},
          {"potent_count", r.potent_count},
          {"preserver_count", r.preserver_count},
          {"classified_count", r.classified_count},
          {"tags", r.tags},
          {"r_values", r.r_values},
          {"converse",
           {{"family", r.family},
            {"family_size", r.family_size},
            {"found_by_sweep", r.family_found_by_sweep},
            {"exact_preservers", r.family_exact_preservers},
            {"preservers_in_family", r.preservers_in_family},
            {"sets_equal", r.converse_ok}}},
          {"failure_count", r.failure_count},
          {"failures", failures},
          {"wall_time_s", r.wall_time},
          {"worker_count", r.worker_count},
          {"verified", r.verified}};
}

}  // namespace incalg
