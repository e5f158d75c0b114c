#include "irsddpg/rng.hpp"

namespace irsddpg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

double Rng::gaussian() { return normal_(gen_); }

double Rng::uniform() { return uniform_(gen_); }

Complex Rng::cgaussian() {
  const double scale = 0.7071067811865476;  // 1/sqrt(2)
  double re = gaussian() * scale;
  double im = gaussian() * scale;
  return {re, im};
}

std::uint64_t Rng::next_u64() { return gen_(); }

std::uint64_t Rng::below(std::uint64_t n) {
  // Modulo bias is ~n/2^64, far below anything our tests can resolve.
  return gen_() % n;
}

Rng Rng::fork(std::uint64_t salt) const {
  return Rng(splitmix64(seed_ ^ splitmix64(salt)));
}

}  // namespace irsddpg
