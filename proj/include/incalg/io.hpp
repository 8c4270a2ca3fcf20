#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "incalg/classify.hpp"
#include "incalg/potents.hpp"

namespace incalg {

using json = nlohmann::json;

std::string read_file(const std::string& path);

/// First line n, then one relation "a < b" per line over labels 1..n.
/// Blank lines and lines starting with '#' are ignored.
Poset parse_poset_text(std::string_view text);
/// {"labels": [...], "relations": [[a, b], ...]}; labels may be strings or numbers.
Poset parse_poset_json(const json& j);
/// Chooses the JSON reader when the text starts with '{'.
Poset parse_poset(std::string_view text);
Poset load_poset(const std::string& path);
/// Text format with Hasse edges as the relations. Needs labels 1..n.
std::string format_poset_text(const Poset& P);
json poset_json(const Poset& P);

/// Nonzero entries as lines "x y code" in canonical order (labels as given).
std::string format_element(const IncElement& f);
/// Reads triples "x y code", one per line, or a JSON list [[x, y, code], ...].
/// Unlisted pairs are zero.
IncElement parse_element(const AlgebraPtr& alg, std::string_view text);
json element_json(const IncElement& f);

/// Header "q dim" ("Q dim" over the rationals), then dim lines: line j holds
/// the dim coefficients of the image of basis element j.
std::string format_linmap(const LinMap& m);
LinMap parse_linmap(const AlgebraPtr& alg, std::string_view text);
json linmap_json(const LinMap& m);

json scalar_json(const Scalar& s);
json order_map_json(const Poset& P, const OrderMap& m);
json to_json(const JordanFactorization& f);
json to_json(const Z2Decomposition& d);
json to_json(const ScalarSplit& s);
json to_json(const ClassificationReport& r);
json to_json(const SpectralDecomposition& d);

}  // namespace incalg
