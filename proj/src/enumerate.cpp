#include <array>
#include <bit>
#include <string>

#include "dee/errors.hpp"
#include "dee/graph.hpp"

namespace dee {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw PreconditionError("labeled enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                            ", got " + std::to_string(n));
  }
}

}  // namespace

std::uint64_t pair_mask_count(int n) {
  check_order(n);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

bool pair_mask_connected(int n, std::uint64_t mask) {
  std::array<std::uint32_t, kMaxEnumerationOrder> rows{};
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) {
        rows[static_cast<std::size_t>(i)] |= 1U << j;
        rows[static_cast<std::size_t>(j)] |= 1U << i;
      }
    }
  }
  const std::uint32_t all = (1U << n) - 1U;
  std::uint32_t seen = 1U;
  std::uint32_t frontier = 1U;
  while (frontier != 0U) {
    std::uint32_t next = 0U;
    for (std::uint32_t f = frontier; f != 0U; f &= f - 1U) {
      next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

void for_each_connected(int n, std::uint64_t first, std::uint64_t last,
                        const std::function<void(std::uint64_t, const Graph&)>& visit) {
  const std::uint64_t total = pair_mask_count(n);
  if (last > total) last = total;
  for (std::uint64_t mask = first; mask < last; ++mask) {
    if (pair_mask_connected(n, mask)) visit(mask, Graph::from_pair_mask(n, mask));
  }
}

void for_each_connected(int n, const std::function<void(std::uint64_t, const Graph&)>& visit) {
  for_each_connected(n, 0, pair_mask_count(n), visit);
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for_each_connected(n, [&](std::uint64_t, const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace dee
