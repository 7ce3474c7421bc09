#include "newtloj/random.hpp"

#include "newtloj/errors.hpp"

namespace newtloj {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("empty range in Rng::uniform");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

Rational draw_support_coefficient(Rng& rng) {
  const std::int64_t p = rng.uniform(1, 1'000'000);
  const std::int64_t q = rng.uniform(1, 1'000'000);
  return Rational(p, q);
}

Rational draw_path_coefficient(Rng& rng) {
  const std::int64_t p = rng.uniform(1, 1'000'000);
  const std::int64_t q = rng.uniform(1, 1'000);
  return Rational(p, q);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t label) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (label + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace newtloj
