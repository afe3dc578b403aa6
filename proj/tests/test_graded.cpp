#include <doctest.h>

#include <functional>

#include "fibint/errors.hpp"
#include "fibint/graded.hpp"
#include "test_util.hpp"

using namespace fibint;

namespace {

Poly x(int nvars, int i) { return Poly::var(nvars, i); }

// Independent Molien oracle for A2: coefficients of 1/((1-t^2)(1-t^3)),
// counted by integer dynamic programming over the generator degrees.
std::vector<long long> series_dims(const std::vector<int>& generator_degrees,
                                   int max_degree) {
  std::vector<long long> dp(max_degree + 1, 0);
  dp[0] = 1;
  for (int g : generator_degrees)
    for (int d = g; d <= max_degree; ++d) dp[d] += dp[d - g];
  return dp;
}

}  // namespace

TEST_CASE("graded span reduces dependent rows") {
  GradedBasis b = graded_span(2, {x(2, 0), x(2, 0) * Rat(2)}, 4);
  CHECK(b.dim(1) == 1);
  CHECK(b.dim(2) == 0);

  GradedBasis empty = graded_span(2, {}, 4);
  for (int d = 0; d <= 4; ++d) CHECK(empty.dim(d) == 0);

  GradedBasis full = graded_span(
      2, {x(2, 0).pow(2), x(2, 0) * x(2, 1), x(2, 1).pow(2)}, 4);
  CHECK(full.dim(2) == 3);
}

TEST_CASE("graded span is idempotent under re-insertion and tests membership") {
  DetRng rng(3);
  GradedBasis b(3, 5);
  std::vector<Poly> inserted;
  for (int i = 0; i < 6; ++i) {
    Poly p = testutil::random_homogeneous(rng, 3, 3, 3);
    b.insert(p);
    inserted.push_back(p);
  }
  std::vector<int> dims = b.dims();
  for (const Poly& p : inserted) {
    CHECK(b.contains(p));
    CHECK_FALSE(b.insert(p));
  }
  CHECK(b.dims() == dims);
  CHECK(b.contains(Poly::zero(3)));
}

TEST_CASE("graded span rejects non-homogeneous input") {
  GradedBasis b(2, 4);
  CHECK_THROWS_AS(b.insert(x(2, 0) + x(2, 0).pow(2)), domain_error);
  CHECK_THROWS_AS(b.insert(x(2, 0).pow(5)), domain_error);
  CHECK_THROWS_AS(b.insert(x(3, 0)), domain_error);
}

TEST_CASE("Molien dimensions for A1 count even polynomials") {
  WeylGroup w = WeylGroup::enumerate(RootSystem::build('A', 1));
  CHECK(molien_dims(w, 4) == std::vector<long long>{1, 0, 1, 0, 1});
}

TEST_CASE("Molien dimensions for A2 match the generating function") {
  WeylGroup w = WeylGroup::enumerate(RootSystem::build('A', 2));
  std::vector<long long> dims = molien_dims(w, 6);
  CHECK(dims == std::vector<long long>{1, 0, 1, 1, 1, 1, 2});
  CHECK(dims == series_dims({2, 3}, 6));
}

TEST_CASE("Molien dimensions for A3 match the generating function") {
  WeylGroup w = WeylGroup::enumerate(RootSystem::build('A', 3));
  CHECK(molien_dims(w, 6) == series_dims({2, 3, 4}, 6));
}

TEST_CASE("Molien dimensions for D4 start 1,0,1,0,3") {
  WeylGroup w = WeylGroup::enumerate(RootSystem::build('D', 4));
  std::vector<long long> dims = molien_dims(w, 6);
  CHECK(std::vector<long long>(dims.begin(), dims.begin() + 5) ==
        std::vector<long long>{1, 0, 1, 0, 3});
  // The invariant ring of a reflection group is free on generators whose
  // degrees are 2,4,4,6 for this group.
  CHECK(dims == series_dims({2, 4, 4, 6}, 6));
}

TEST_CASE("Molien agrees with Reynolds spanning per degree") {
  for (const char* label : {"A2", "A3"}) {
    RootSystem rs = RootSystem::parse(label);
    WeylGroup w = WeylGroup::enumerate(rs);
    std::vector<long long> dims = molien_dims(w, 6);
    for (int d = 0; d <= 6; ++d) {
      GradedBasis span(rs.t_dim(), 6);
      // Reynolds images of all ambient monomials of degree d, restricted.
      std::vector<Mono> monos;
      Mono scratch(rs.ambient_dim(), 0);
      std::function<void(int, int)> gen = [&](int pos, int left) {
        if (pos == rs.ambient_dim() - 1) {
          scratch[pos] = left;
          monos.push_back(scratch);
          return;
        }
        for (int e = 0; e <= left; ++e) {
          scratch[pos] = e;
          gen(pos + 1, left - e);
        }
      };
      gen(0, d);
      for (const Mono& m : monos) {
        Poly mono(rs.ambient_dim());
        mono.add_term(m, 1);
        span.insert(restrict_to_cartan(rs, reynolds(w, mono)));
      }
      CHECK(span.dim(d) == dims[d]);
    }
  }
}

TEST_CASE("jacobian rank certifies independence and bounds dependence") {
  Poly q = x(1, 0).pow(2);
  CHECK(jacobian_rank({q, x(1, 0).pow(4)}, {{Rat(2)}}) == 1);
  CHECK(jacobian_rank({q, q * q}, {{Rat(3)}}) == 1);

  // Power sums restricted to the A2 Cartan at a regular point.
  RootSystem a2 = RootSystem::build('A', 2);
  Poly p2 = restrict_to_cartan(
      a2, x(3, 0).pow(2) + x(3, 1).pow(2) + x(3, 2).pow(2));
  Poly p3 = restrict_to_cartan(
      a2, x(3, 0).pow(3) + x(3, 1).pow(3) + x(3, 2).pow(3));
  CHECK(jacobian_rank({p2, p3}, {{Rat(1), Rat(0)}}) == 2);

  CHECK_THROWS_AS(jacobian_rank({}, {{Rat(1)}}), domain_error);
  CHECK_THROWS_AS(jacobian_rank({q}, {}), domain_error);
  CHECK_THROWS_AS(jacobian_rank({q}, {{Rat(1), Rat(2)}}), domain_error);
}

TEST_CASE("monomial counts") {
  CHECK(monomial_count(1, 7) == 1);
  CHECK(monomial_count(2, 9) == 10);
  CHECK(monomial_count(3, 12) == 91);
  CHECK(monomial_count(4, 0) == 1);
}
