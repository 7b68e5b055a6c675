#include "scg/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace scg {

std::uint64_t Rng::splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t instance, std::uint64_t field) {
  std::uint64_t s = seed;
  std::uint64_t mixed = splitmix64(s);
  s = mixed ^ instance;
  mixed = splitmix64(s);
  s = mixed ^ field;
  engine_.seed(splitmix64(s));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo);
  if (span == ~0ULL) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~0ULL - (~0ULL % range + 1) % range;
  std::uint64_t v;
  do {
    v = next();
  } while (v > limit);
  return lo + static_cast<std::int64_t>(v % range);
}

std::vector<int> Rng::subset(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("subset size out of range");
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < k; ++i) std::swap(pool[i], pool[static_cast<std::size_t>(uniform(i, n - 1))]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace scg
