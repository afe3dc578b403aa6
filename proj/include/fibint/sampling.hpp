#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fibint/rational.hpp"
#include "fibint/rootsys.hpp"

namespace fibint {

/// Default seed recorded in every report that samples anything.
constexpr std::uint64_t kDefaultSeed = 271828;

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic generator for sample coordinates. Mapping from engine
/// output to values avoids std::uniform_int_distribution so that identical
/// seeds give identical samples on every platform.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  std::uint64_t next() { return eng_(); }

  int small_int(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(next() % span);
  }

 private:
  std::mt19937_64 eng_;
};

/// Draws `count` distinct nonzero integer vectors with coordinates in
/// [-9, 9]. The first vectors are chosen to have pairwise distinct
/// directions while fresh directions remain; later vectors may repeat a
/// direction but never a point. Returns fewer than `count` only if the box
/// is exhausted.
std::vector<VecI> sample_coefficient_vectors(DetRng& rng, int dim, int count,
                                             int distinct_directions_wanted);

/// Nonzero integer points in [-9, 9]^dim, pairwise distinct, as rationals.
std::vector<VecQ> sample_integer_points(DetRng& rng, int dim, int count);

}  // namespace fibint
