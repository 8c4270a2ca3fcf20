#pragma once

#include <cstdint>
#include <vector>

#include "incalg/coded.hpp"

namespace incalg {

inline constexpr std::uint64_t kDefaultSweepBudget = 100'000'000;

/// |GL(dim, q)| = prod_{i<dim} (q^dim - q^i). Throws BudgetExceeded on overflow.
std::uint64_t gl_order(std::size_t dim, unsigned q);

/// First-column code range [begin, end) handled by worker w of `workers`.
/// Ranges split the nonzero codes contiguously.
std::pair<Code, Code> gl_partition(const CodedSpace& space, unsigned w, unsigned workers);

/// Calls visit(cols) for every invertible matrix whose first column lies in
/// [begin, end). Matrices are produced column by column, each new column
/// outside the span of the previous ones, in lexicographic order of the
/// column codes.
template <class Visit>
void for_each_gl(const CodedSpace& space, Code begin, Code end, Visit&& visit) {
  const std::size_t dim = space.dim();
  const std::uint64_t size = space.size();
  const unsigned q = space.q();
  if (dim == 0) return;
  std::vector<Code> cols(dim, 0);
  // in_span[i] marks the span of cols[0..i-1]; span_list[i] lists it.
  std::vector<std::vector<std::uint8_t>> in_span(dim, std::vector<std::uint8_t>(size, 0));
  std::vector<std::vector<Code>> span_list(dim);
  in_span[0][0] = 1;
  span_list[0] = {0};

  auto rec = [&](auto&& self, std::size_t i) -> void {
    const Code lo = i == 0 ? begin : 0;
    const Code hi = i == 0 ? end : static_cast<Code>(size);
    for (Code c = lo; c < hi; ++c) {
      if (in_span[i][c]) continue;
      cols[i] = c;
      if (i + 1 == dim) {
        visit(static_cast<const Code*>(cols.data()));
        continue;
      }
      auto& next = span_list[i + 1];
      auto& mark = in_span[i + 1];
      next.clear();
      for (Code s : span_list[i])
        for (unsigned a = 0; a < q; ++a) {
          const Code v = space.add(s, space.scale(static_cast<std::uint8_t>(a), c));
          next.push_back(v);
          mark[v] = 1;
        }
      self(self, i + 1);
      for (Code v : next) mark[v] = 0;
    }
  };
  rec(rec, 0);
}

/// Every invertible matrix as its column codes, in enumeration order.
std::vector<std::vector<Code>> enumerate_gl(const CodedSpace& space, std::uint64_t budget = kDefaultSweepBudget);

/// Per-worker counts of a full enumeration split across `workers` threads.
std::vector<std::uint64_t> count_gl(const CodedSpace& space, unsigned workers);

}  // namespace incalg
