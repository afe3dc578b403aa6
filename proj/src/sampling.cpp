#include "fibint/sampling.hpp"

#include <numeric>
#include <set>

namespace fibint {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

VecI direction_of(const VecI& v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, x < 0 ? -x : x);
  VecI d = v;
  if (g > 1)
    for (int& x : d) x /= g;
  for (int x : d) {
    if (x == 0) continue;
    if (x < 0)
      for (int& y : d) y = -y;
    break;
  }
  return d;
}

}  // namespace

std::vector<VecI> sample_coefficient_vectors(DetRng& rng, int dim, int count,
                                             int distinct_directions_wanted) {
  std::vector<VecI> out;
  std::set<VecI> seen_points;
  std::set<VecI> seen_directions;
  long long attempts = 0;
  const long long max_attempts = 20000LL * (count + 1);
  while (static_cast<int>(out.size()) < count && attempts < max_attempts) {
    ++attempts;
    VecI c(dim);
    bool zero = true;
    for (int i = 0; i < dim; ++i) {
      c[i] = rng.small_int(-9, 9);
      if (c[i] != 0) zero = false;
    }
    if (zero) continue;
    if (!seen_points.insert(c).second) continue;
    VecI dir = direction_of(c);
    bool fresh = seen_directions.insert(dir).second;
    if (!fresh &&
        static_cast<int>(seen_directions.size()) < distinct_directions_wanted) {
      // Still hunting for new directions; put the point back for later.
      seen_points.erase(c);
      continue;
    }
    out.push_back(std::move(c));
  }
  // If the direction hunt stalled (tiny boxes), fill with distinct points.
  while (static_cast<int>(out.size()) < count && attempts < 2 * max_attempts) {
    ++attempts;
    VecI c(dim);
    bool zero = true;
    for (int i = 0; i < dim; ++i) {
      c[i] = rng.small_int(-9, 9);
      if (c[i] != 0) zero = false;
    }
    if (zero || !seen_points.insert(c).second) continue;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VecQ> sample_integer_points(DetRng& rng, int dim, int count) {
  std::vector<VecI> raw = sample_coefficient_vectors(rng, dim, count, 0);
  std::vector<VecQ> out;
  for (const VecI& v : raw) out.emplace_back(v.begin(), v.end());
  return out;
}

}  // namespace fibint
