#include "eop/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eop/prng.hpp"

namespace eop {

Graph gen_proper_interval(int n, double density, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one interval");
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");

  // Integer tick arithmetic keeps the construction exact: intervals have
  // length kWidth and overlap iff their left endpoints differ by at most
  // kWidth.
  constexpr long long kWidth = 1'000'000;
  const long long spread = llround((1.0 - density) * static_cast<double>(n) * static_cast<double>(kWidth));

  SplitMix64 rng(seed);
  std::vector<long long> left(static_cast<size_t>(n), 0);
  if (spread > 0)
    for (auto& x : left) x = static_cast<long long>(rng.next_below(static_cast<uint64_t>(spread) + 1));
  std::sort(left.begin(), left.end());

  // Close any gap wider than one interval so the graph comes out connected.
  long long shift = 0;
  for (size_t i = 1; i < left.size(); ++i) {
    left[i] -= shift;
    if (left[i] - left[i - 1] > kWidth) {
      shift += left[i] - left[i - 1] - kWidth;
      left[i] = left[i - 1] + kWidth;
    }
  }

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && left[static_cast<size_t>(j)] - left[static_cast<size_t>(i)] <= kWidth; ++j)
      pairs.emplace_back(i, j);
  return Graph::build(n, pairs);
}

Graph gen_block(int n_blocks, int max_block_size, uint64_t seed) {
  if (n_blocks < 1) throw std::invalid_argument("need at least one block");
  if (max_block_size < 2) throw std::invalid_argument("blocks need at least two vertices");

  SplitMix64 rng(seed);
  auto block_size = [&] {
    return 2 + static_cast<int>(rng.next_below(static_cast<uint64_t>(max_block_size - 1)));
  };

  std::vector<std::pair<int, int>> pairs;
  int n = block_size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  for (int b = 1; b < n_blocks; ++b) {
    const int anchor = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
    const int size = block_size();
    std::vector<int> verts{anchor};
    for (int i = 0; i < size - 1; ++i) verts.push_back(n++);
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j) pairs.emplace_back(verts[i], verts[j]);
  }
  return Graph::build(n, pairs);
}

Graph gen_split(int k_size, int s_size, double p, uint64_t seed) {
  if (k_size < 0 || s_size < 0) throw std::invalid_argument("sizes must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");

  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k_size; ++i)
    for (int j = i + 1; j < k_size; ++j) pairs.emplace_back(i, j);
  for (int i = 0; i < k_size; ++i)
    for (int s = 0; s < s_size; ++s)
      if (rng.next_double() < p) pairs.emplace_back(i, k_size + s);
  return Graph::build(k_size + s_size, pairs);
}

}  // namespace eop
