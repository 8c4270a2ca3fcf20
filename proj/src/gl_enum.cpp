#include "incalg/gl_enum.hpp"

#include <limits>
#include <thread>

namespace incalg {

std::uint64_t gl_order(std::size_t dim, unsigned q) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t qd = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (qd > kMax / q) throw BudgetExceeded("q^dim overflows 64 bits");
    qd *= q;
  }
  std::uint64_t order = 1, qi = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    const std::uint64_t factor = qd - qi;
    if (factor != 0 && order > kMax / factor) throw BudgetExceeded("|GL| overflows 64 bits");
    order *= factor;
    qi *= q;
  }
  return order;
}

std::pair<Code, Code> gl_partition(const CodedSpace& space, unsigned w, unsigned workers) {
  const std::uint64_t nonzero = space.size() - 1;
  const auto begin = static_cast<Code>(1 + nonzero * w / workers);
  const auto end = static_cast<Code>(1 + nonzero * (w + 1) / workers);
  return {begin, end};
}

std::vector<std::vector<Code>> enumerate_gl(const CodedSpace& space, std::uint64_t budget) {
  const std::uint64_t total = gl_order(space.dim(), space.q());
  if (total > budget)
    throw BudgetExceeded("GL(" + std::to_string(space.dim()) + "," + std::to_string(space.q()) + ") has " +
                         std::to_string(total) + " elements, over the budget of " + std::to_string(budget));
  std::vector<std::vector<Code>> out;
  out.reserve(total);
  for_each_gl(space, 1, static_cast<Code>(space.size()),
              [&](const Code* cols) { out.emplace_back(cols, cols + space.dim()); });
  return out;
}

std::vector<std::uint64_t> count_gl(const CodedSpace& space, unsigned workers) {
  workers = std::max(1u, workers);
  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      const auto [b, e] = gl_partition(space, w, workers);
      std::uint64_t c = 0;
      for_each_gl(space, b, e, [&](const Code*) { ++c; });
      counts[w] = c;
    });
  for (auto& t : pool) t.join();
  return counts;
}

}  // namespace incalg
