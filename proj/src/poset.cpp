#include "incalg/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace incalg {

Poset Poset::from_relations(const std::vector<std::string>& labels,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
  const std::size_t n = labels.size();
  auto input_index = [&](const std::string& l) -> std::size_t {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw UnknownLabel("unknown label '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) throw ParseError("duplicate label '" + labels[i] + "'");

  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (const auto& [a, b] : relations) rel[input_index(a) * n + input_index(b)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k * n + j]) rel[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i * n + j] && rel[j * n + i])
        throw CycleError("relations force " + labels[i] + " = " + labels[j]);

  // Linear extension: repeatedly take the smallest-labelled minimal element.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rel[i * n + j]) ++indegree[j];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rel[i * n + j] && --indegree[j] == 0) ready.push(j);
  }

  Poset p;
  p.labels_.reserve(n);
  for (std::size_t i : order) p.labels_.push_back(labels[i]);
  p.leq_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p.leq_[a * n + b] = rel[order[a] * n + order[b]];

  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = x + 1; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      p.strict_.emplace_back(x, y);
      bool cover = true;
      for (std::uint32_t z = x + 1; z < y && cover; ++z)
        if (p.leq(x, z) && p.leq(z, y)) cover = false;
      if (cover) p.hasse_.emplace_back(x, y);
    }
  return p;
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 1) rel.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return from_relations(labels, rel);
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return from_relations(labels, {});
}

std::uint32_t Poset::index_of(std::string_view label) const {
  for (std::uint32_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw UnknownLabel("unknown label '" + std::string(label) + "'");
}

std::vector<std::uint32_t> Poset::interval(std::uint32_t x, std::uint32_t y) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t z = x; z <= y && z < size(); ++z)
    if (leq(x, z) && leq(z, y)) out.push_back(z);
  return out;
}

std::size_t Poset::length() const {
  // Longest path in the Hasse diagram; internal order is a linear extension.
  std::vector<std::size_t> best(size(), 0);
  std::size_t result = 0;
  for (std::uint32_t y = 0; y < size(); ++y)
    for (const auto& [a, b] : hasse_)
      if (b == y) {
        best[y] = std::max(best[y], best[a] + 1);
        result = std::max(result, best[y]);
      }
  return result;
}

bool is_connected(const Poset& p) {
  if (p.size() == 0) throw EmptyPoset("connectivity of the empty poset");
  std::vector<std::vector<std::uint32_t>> adj(p.size());
  for (const auto& [a, b] : p.hasse_edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(p.size(), false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == p.size();
}

OrderMap OrderMap::inverse() const {
  OrderMap inv{std::vector<std::uint32_t>(mapping.size()), kind};
  for (std::uint32_t i = 0; i < mapping.size(); ++i) inv.mapping[mapping[i]] = i;
  return inv;
}

const char* to_string(OrderMap::Kind k) {
  return k == OrderMap::Kind::automorphism ? "automorphism" : "anti_automorphism";
}

bool is_order_map(const Poset& p, const std::vector<std::uint32_t>& m, OrderMap::Kind kind) {
  const std::size_t n = p.size();
  if (m.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto v : m) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const bool image = kind == OrderMap::Kind::automorphism ? p.leq(m[x], m[y]) : p.leq(m[y], m[x]);
      if (p.leq(x, y) != image) return false;
    }
  return true;
}

std::vector<OrderMap> enumerate_order_maps(const Poset& p) {
  const std::uint32_t n = static_cast<std::uint32_t>(p.size());
  std::vector<OrderMap> out;
  for (auto kind : {OrderMap::Kind::automorphism, OrderMap::Kind::anti_automorphism}) {
    std::vector<std::uint32_t> m(n);
    std::vector<bool> used(n, false);
    auto relation_ok = [&](std::uint32_t a, std::uint32_t b) {
      const bool image = kind == OrderMap::Kind::automorphism ? p.leq(m[a], m[b]) : p.leq(m[b], m[a]);
      return p.leq(a, b) == image;
    };
    std::function<void(std::uint32_t)> extend = [&](std::uint32_t i) {
      if (i == n) {
        out.push_back(OrderMap{m, kind});
        return;
      }
      for (std::uint32_t v = 0; v < n; ++v) {
        if (used[v]) continue;
        m[i] = v;
        bool ok = true;
        for (std::uint32_t a = 0; a <= i && ok; ++a) ok = relation_ok(a, i) && relation_ok(i, a);
        if (!ok) continue;
        used[v] = true;
        extend(i + 1);
        used[v] = false;
      }
    };
    extend(0);
  }
  return out;
}

}  // namespace incalg
