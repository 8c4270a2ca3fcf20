#include "incalg/io.hpp"

#include <fstream>
#include <sstream>

namespace incalg {
namespace {

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string label_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("labels must be strings or integers");
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("scalars must be strings or integers");
}

bool looks_like_json(std::string_view text) {
  const auto b = text.find_first_not_of(" \t\r\n");
  return b != std::string_view::npos && (text[b] == '{' || text[b] == '[');
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Poset parse_poset_text(std::string_view text) {
  const auto ls = lines_of(text);
  if (ls.empty()) throw ParseError("empty poset description");
  std::size_t n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoul(ls[0], &pos);
    if (pos != ls[0].size()) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("first line must be the number of elements, got '" + ls[0] + "'");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto w = words(ls[i]);
    if (w.size() != 3 || w[1] != "<") throw ParseError("expected 'a < b', got '" + ls[i] + "'");
    rel.emplace_back(w[0], w[2]);
  }
  return Poset::from_relations(labels, rel);
}

Poset parse_poset_json(const json& j) {
  if (!j.is_object() || !j.contains("labels")) throw ParseError("poset JSON needs a \"labels\" list");
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels")) labels.push_back(label_of(l));
  std::vector<std::pair<std::string, std::string>> rel;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      if (!r.is_array() || r.size() != 2) throw ParseError("relations are pairs [a, b]");
      rel.emplace_back(label_of(r[0]), label_of(r[1]));
    }
  return Poset::from_relations(labels, rel);
}

Poset parse_poset(std::string_view text) {
  if (looks_like_json(text)) {
    try {
      return parse_poset_json(json::parse(text));
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad poset JSON: ") + e.what());
    }
  }
  return parse_poset_text(text);
}

Poset load_poset(const std::string& path) { return parse_poset(read_file(path)); }

std::string format_poset_text(const Poset& P) {
  std::ostringstream out;
  out << P.size() << "\n";
  for (const auto& [a, b] : P.hasse_edges()) out << P.label(a) << " < " << P.label(b) << "\n";
  return out.str();
}

json poset_json(const Poset& P) {
  json rel = json::array();
  for (const auto& [a, b] : P.hasse_edges()) rel.push_back({P.label(a), P.label(b)});
  return {{"labels", P.labels()}, {"relations", rel}};
}

std::string format_element(const IncElement& f) {
  std::ostringstream out;
  const Algebra& alg = f.algebra();
  for (std::size_t j = 0; j < f.dim(); ++j) {
    if (f[j].is_zero()) continue;
    const auto [x, y] = alg.pair(j);
    out << alg.poset().label(x) << " " << alg.poset().label(y) << " " << f[j].to_string() << "\n";
  }
  return out.str();
}

IncElement parse_element(const AlgebraPtr& alg, std::string_view text) {
  IncElement f(alg);
  const auto& P = alg->poset();
  auto put = [&](const std::string& x, const std::string& y, const std::string& c) {
    const std::size_t j = alg->index(P.index_of(x), P.index_of(y));
    f.set(j, alg->field().parse_scalar(c));
  };
  if (looks_like_json(text)) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad element JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("element JSON must be a list of triples");
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 3) throw ParseError("element entries are triples [x, y, code]");
      put(label_of(t[0]), label_of(t[1]), scalar_text(t[2]));
    }
    return f;
  }
  for (const auto& line : lines_of(text)) {
    const auto w = words(line);
    if (w.size() != 3) throw ParseError("expected 'x y code', got '" + line + "'");
    put(w[0], w[1], w[2]);
  }
  return f;
}

json scalar_json(const Scalar& s) {
  if (s.field().is_finite()) return s.code();
  return s.to_string();
}

json element_json(const IncElement& f) {
  json out = json::array();
  const Algebra& alg = f.algebra();
  for (std::size_t j = 0; j < f.dim(); ++j) {
    if (f[j].is_zero()) continue;
    const auto [x, y] = alg.pair(j);
    out.push_back({alg.poset().label(x), alg.poset().label(y), scalar_json(f[j])});
  }
  return out;
}

std::string format_linmap(const LinMap& m) {
  std::ostringstream out;
  const Field& F = m.algebra().field();
  out << (F.is_finite() ? std::to_string(F.order()) : std::string("Q")) << " " << m.dim() << "\n";
  for (std::size_t j = 0; j < m.dim(); ++j) {
    for (std::size_t i = 0; i < m.dim(); ++i) out << (i ? " " : "") << m.entry(i, j).to_string();
    out << "\n";
  }
  return out.str();
}

LinMap parse_linmap(const AlgebraPtr& alg, std::string_view text) {
  const auto ls = lines_of(text);
  if (ls.empty()) throw ParseError("empty map file");
  const auto head = words(ls[0]);
  if (head.size() != 2) throw ParseError("map header must be 'q dim'");
  const Field& F = Field::parse(head[0]);
  if (&F != &alg->field()) throw FieldMismatch("map is over " + F.name() + ", algebra over " + alg->field().name());
  if (head[1] != std::to_string(alg->dim()))
    throw DimensionMismatch("map has dimension " + head[1] + ", algebra has " + std::to_string(alg->dim()));
  if (ls.size() != alg->dim() + 1) throw ParseError("map needs one line per basis element");
  std::vector<Vector> cols;
  for (std::size_t j = 1; j < ls.size(); ++j) {
    const auto w = words(ls[j]);
    if (w.size() != alg->dim()) throw ParseError("map line " + std::to_string(j) + " has the wrong length");
    Vector c;
    for (const auto& s : w) c.push_back(F.parse_scalar(s));
    cols.push_back(std::move(c));
  }
  return LinMap(alg, std::move(cols));
}

json linmap_json(const LinMap& m) {
  json cols = json::array();
  for (std::size_t j = 0; j < m.dim(); ++j) {
    json c = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) c.push_back(scalar_json(m.entry(i, j)));
    cols.push_back(c);
  }
  return {{"field", m.algebra().field().name()}, {"dim", m.dim()}, {"columns", cols}};
}

json order_map_json(const Poset& P, const OrderMap& m) {
  json mapping = json::object();
  for (std::uint32_t x = 0; x < m.mapping.size(); ++x) mapping[P.label(x)] = P.label(m(x));
  return {{"kind", to_string(m.kind)}, {"mapping", mapping}};
}

json to_json(const JordanFactorization& f) {
  return {{"inner_beta", element_json(f.inner_beta)},
          {"order_map", order_map_json(f.inner_beta.algebra().poset(), f.order_map)},
          {"sigma", element_json(f.sigma)}};
}

json to_json(const Z2Decomposition& d) {
  return {{"inner_beta", element_json(d.inner_beta)},
          {"shift", linmap_json(d.factors.shift)},
          {"lie_part", linmap_json(d.factors.lie_part)}};
}

json to_json(const ScalarSplit& s) {
  return {{"r", scalar_json(s.r)},
          {"psi_kind", to_string(s.psi_kind)},
          {"psi", linmap_json(s.psi)},
          {"psi_factors", to_json(s.psi_factors)}};
}

json to_json(const ClassificationReport& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) {
    json e = {{"name", c.name}, {"holds", c.holds}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    certs.push_back(e);
  }
  json out = {{"k", r.k},
              {"regime", to_string(r.regime)},
              {"preserver_check", to_string(r.preserver_check)},
              {"tag", r.tag},
              {"certificates", certs}};
  if (r.jordan) out["jordan"] = to_json(*r.jordan);
  if (r.z2) out["z2"] = to_json(*r.z2);
  if (r.split) out["scalar_split"] = to_json(*r.split);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json to_json(const SpectralDecomposition& d) {
  json b = json::array();
  for (const auto& e : d.idempotents) b.push_back(element_json(e));
  return {{"k", d.k}, {"epsilon", scalar_json(d.epsilon)}, {"idempotents", b}, {"original", element_json(d.original)}};
}

}  // namespace incalg
