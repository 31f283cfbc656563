#pragma once

#include <cstdint>
#include <random>

namespace sbkd {

/// splitmix64 finalizer. Used to derive independent per-replication seeds:
/// seed_for(master, i) == mix64(master + i).
std::uint64_t mix64(std::uint64_t x);

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) { return mix64(master + index); }

/// Reproducible uniform source backed by std::mt19937_64. The mapping from
/// engine output to doubles is fixed here (not delegated to
/// std::uniform_real_distribution) so streams are identical across standard
/// library implementations.
///
/// Single owner: movable, not meant to be shared across threads.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform on the open interval (0, 1): (k + 0.5) / 2^53 for a 53-bit k.
  double uniform_open();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace sbkd
