#pragma once

#include <cstdint>
#include <random>

#include "newtloj/lattice.hpp"

namespace newtloj {

/// Seeded generator with platform-independent bounded draws (the standard
/// distributions are implementation-defined, which would break
/// byte-identical output across toolchains).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(std::uint64_t num = 1, std::uint64_t den = 2) {
    return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
  }

 private:
  std::mt19937_64 engine_;
};

/// Generic coefficient for a support monomial: p/q with p, q in [1, 10^6].
Rational draw_support_coefficient(Rng& rng);
/// Generic coefficient for a path component: p/q with p in [1, 10^6],
/// q in [1, 10^3].
Rational draw_path_coefficient(Rng& rng);

/// Derives an independent stream seed from a base seed and a label.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t label);

}  // namespace newtloj
