#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace scg {

/// Portable seeded generator. Each (seed, instance, field) triple gets its own
/// mt19937_64 stream, seeded through splitmix64, so adding a field never
/// perturbs the others. Bounded draws avoid std::uniform_int_distribution,
/// whose output differs between standard libraries.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64+splitmix64";

  explicit Rng(std::uint64_t seed, std::uint64_t instance = 0, std::uint64_t field = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Sorted uniform k-subset of {0..n-1}.
  std::vector<int> subset(int n, int k);
  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

  static std::uint64_t splitmix64(std::uint64_t& state);

 private:
  std::mt19937_64 engine_;
};

enum RngField : std::uint64_t {
  kFieldStructure = 1,
  kFieldFollowerCosts = 2,
  kFieldLeaderCosts = 3,
  kFieldLeaderActions = 4,
  kFieldFormula = 5,
  kFieldItems = 6,
};

}  // namespace scg
