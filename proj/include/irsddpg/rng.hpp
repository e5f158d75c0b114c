#pragma once

#include <cstdint>
#include <random>

#include "irsddpg/types.hpp"

namespace irsddpg {

/// Seeded random stream. All stochastic operations take one of these
/// explicitly, so runs are reproducible from a single seed. fork() derives
/// an independent stream from the parent seed and a salt without consuming
/// state, which keeps streams decoupled from call order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  double gaussian();       // N(0, 1)
  double uniform();        // [0, 1)
  Complex cgaussian();     // CN(0, 1): re and im each N(0, 1/2)
  std::uint64_t next_u64();
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)

  Rng fork(std::uint64_t salt) const;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace irsddpg
