#include <doctest.h>

#include "fibint/errors.hpp"
#include "fibint/subalgebra.hpp"

using namespace fibint;

namespace {

OrbitPoint orbit_of(const RootSystem& rs, const char* xi) {
  return classify_orbit(rs, parse_rational_vector(xi));
}

}  // namespace

TEST_CASE("face span bases") {
  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(face_span_basis(a2, orbit_of(a2, "1,0,-1")).size() == 2);

  std::vector<VecQ> cp2 = face_span_basis(a2, orbit_of(a2, "2,-1,-1"));
  REQUIRE(cp2.size() == 1);
  CHECK(cp2[0] == parse_rational_vector("2,-1,-1"));

  RootSystem a3 = RootSystem::build('A', 3);
  std::vector<VecQ> g24 = face_span_basis(a3, orbit_of(a3, "1,1,-1,-1"));
  REQUIRE(g24.size() == 1);
  CHECK(g24[0] == parse_rational_vector("1,1,-1,-1"));
}

TEST_CASE("the flag orbit subalgebra of A2 is full up to degree 6") {
  WeylGroup w = WeylGroup::enumerate(RootSystem::build('A', 2));
  SubalgebraReport r = generate_subalgebra(w, orbit_of(w.root_system(), "1,0,-1"), 6);
  CHECK(r.algebra_dims == std::vector<int>{1, 0, 1, 1, 1, 1, 2});
  CHECK(r.invariant_dims == std::vector<long long>{1, 0, 1, 1, 1, 1, 2});
  CHECK(r.full_up_to_cutoff);
  CHECK(r.missing_degrees.empty());
  CHECK(r.saturated);
}

TEST_CASE("the projective-space orbit of A2 is full up to degree 6") {
  WeylGroup w = WeylGroup::enumerate(RootSystem::build('A', 2));
  SubalgebraReport r = generate_subalgebra(w, orbit_of(w.root_system(), "2,-1,-1"), 6);
  CHECK(r.full_up_to_cutoff);
}

TEST_CASE("the symmetric grassmannian point of A3 misses degree 3") {
  WeylGroup w = WeylGroup::enumerate(RootSystem::build('A', 3));
  SubalgebraReport r = generate_subalgebra(w, orbit_of(w.root_system(), "1,1,-1,-1"), 4);
  CHECK_FALSE(r.full_up_to_cutoff);
  CHECK(r.algebra_dims[3] == 0);
  CHECK(r.invariant_dims[3] == 1);
  CHECK(r.missing_degrees == std::vector<int>{3});
  // Degree guarantees that hold for every orbit.
  CHECK(r.algebra_dims[0] == 1);
  CHECK(r.algebra_dims[1] == 0);
  CHECK(r.algebra_dims[2] >= 1);
}

TEST_CASE("cutoff below 2 is rejected") {
  WeylGroup w = WeylGroup::enumerate(RootSystem::build('A', 2));
  CHECK_THROWS_AS(generate_subalgebra(w, orbit_of(w.root_system(), "1,0,-1"), 1),
                  domain_error);
}

TEST_CASE("seed changes the samples but not the generated dimensions") {
  WeylGroup w = WeylGroup::enumerate(RootSystem::build('A', 2));
  OrbitPoint orbit = orbit_of(w.root_system(), "1,0,-1");
  SubalgebraReport a = generate_subalgebra(w, orbit, 5, 1);
  SubalgebraReport b = generate_subalgebra(w, orbit, 5, 99991);
  CHECK(a.algebra_dims == b.algebra_dims);
  CHECK(a.saturated);
  CHECK(b.saturated);
}

TEST_CASE("powers-only and product seeding span the same subalgebra") {
  struct Case {
    const char* group;
    const char* xi;
    int cutoff;
  };
  for (const Case& c : {Case{"A2", "1,0,-1", 5}, Case{"A2", "2,-1,-1", 5},
                        Case{"A3", "1,1,-1,-1", 4}}) {
    WeylGroup w = WeylGroup::enumerate(RootSystem::parse(c.group));
    OrbitPoint orbit = orbit_of(w.root_system(), c.xi);
    SubalgebraReport powers =
        generate_subalgebra(w, orbit, c.cutoff, kDefaultSeed, SeedMode::kPowers);
    SubalgebraReport products =
        generate_subalgebra(w, orbit, c.cutoff, kDefaultSeed, SeedMode::kProducts);
    CHECK(powers.algebra_dims == products.algebra_dims);
  }
}

TEST_CASE("independence ranks account for vanishing odd classes") {
  WeylGroup a2 = WeylGroup::enumerate(RootSystem::build('A', 2));
  const RootSystem& rs2 = a2.root_system();

  // (1,0,-1) is Weyl-symmetric, so the odd classes vanish: only P2 and P4
  // survive below degree 4, and P4 is proportional to P2^2 on this group.
  IndependenceReport sym4 = independence_report(a2, orbit_of(rs2, "1,0,-1"), 4);
  CHECK(sym4.rank == 1);
  CHECK_FALSE(sym4.certified);
  CHECK(sym4.k_used == std::vector<int>{2, 4});

  // Degree 6 brings in the cube invariant squared.
  IndependenceReport sym6 = independence_report(a2, orbit_of(rs2, "1,0,-1"), 6);
  CHECK(sym6.rank == 2);
  CHECK(sym6.certified);

  // An asymmetric regular point has nonzero odd classes already at k=3.
  IndependenceReport asym = independence_report(a2, orbit_of(rs2, "3,-1,-2"), 4);
  CHECK(asym.rank == 2);
  CHECK(asym.certified);
  CHECK(asym.k_used == std::vector<int>{2, 3, 4});

  WeylGroup a3 = WeylGroup::enumerate(RootSystem::build('A', 3));
  const RootSystem& rs3 = a3.root_system();
  IndependenceReport deep = independence_report(a3, orbit_of(rs3, "3,1,-1,-3"), 6);
  CHECK(deep.rank == 3);
  CHECK(deep.certified);
  CHECK(deep.k_used == std::vector<int>{2, 4, 6});

  // Below degree 6 only two classes survive; their independence is still
  // certified because the rank reaches the class count.
  IndependenceReport shallow = independence_report(a3, orbit_of(rs3, "3,1,-1,-3"), 5);
  CHECK(shallow.rank == 2);
  CHECK(shallow.certified);
  CHECK(shallow.k_used == std::vector<int>{2, 4});

  IndependenceReport g24 = independence_report(a3, orbit_of(rs3, "1,1,-1,-1"), 5);
  CHECK(g24.rank <= 2);
  CHECK(g24.k_used == std::vector<int>{2, 4});

  CHECK_THROWS_AS(independence_report(a3, orbit_of(rs3, "1,1,-1,-1"), 2), domain_error);
}

TEST_CASE("subalgebras of nearby orbits contain the degenerate one") {
  WeylGroup a3 = WeylGroup::enumerate(RootSystem::build('A', 3));
  const RootSystem& rs = a3.root_system();
  OrbitPoint g24 = orbit_of(rs, "1,1,-1,-1");
  OrbitPoint nearby = orbit_of(rs, "8/7,1,-1,-8/7");

  ContainmentVerdict self = semicontinuity_check(a3, g24, g24, 4);
  CHECK(self.contained);

  ContainmentVerdict verdict = semicontinuity_check(a3, g24, nearby, 4);
  CHECK(verdict.contained);
  CHECK_FALSE(verdict.first_failing_degree.has_value());
  REQUIRE(verdict.per_degree.size() == 5);
  for (const DegreeContainment& row : verdict.per_degree)
    CHECK(row.dim_inner <= row.dim_outer);

  // The roles cannot be swapped: the regular orbit does not lie on a face
  // contained in the closure of the grassmannian one.
  CHECK_THROWS_AS(semicontinuity_check(a3, nearby, g24, 4), domain_error);

  WeylGroup a2 = WeylGroup::enumerate(RootSystem::build('A', 2));
  ContainmentVerdict cp2 = semicontinuity_check(
      a2, orbit_of(a2.root_system(), "2,-1,-1"),
      orbit_of(a2.root_system(), "2,-9/10,-11/10"), 6);
  CHECK(cp2.contained);
}

TEST_CASE("product reports convolve factor dimensions") {
  WeylGroup a1 = WeylGroup::enumerate(RootSystem::build('A', 1));
  OrbitPoint o = orbit_of(a1.root_system(), "1,-1");
  SubalgebraReport factor = generate_subalgebra(a1, o, 4);
  CHECK(factor.algebra_dims == std::vector<int>{1, 0, 1, 0, 1});

  SubalgebraReport pair = product_subalgebra({factor, factor});
  CHECK(pair.algebra_dims == std::vector<int>{1, 0, 2, 0, 3});
  CHECK(pair.invariant_dims == std::vector<long long>{1, 0, 2, 0, 3});
  CHECK(pair.full_up_to_cutoff);

  SubalgebraReport triple = product_subalgebra({factor, factor, factor});
  CHECK(triple.algebra_dims[2] == 3);

  SubalgebraReport single = product_subalgebra({factor});
  CHECK(single.algebra_dims == factor.algebra_dims);

  SubalgebraReport other = generate_subalgebra(a1, o, 3);
  CHECK_THROWS_AS(product_subalgebra({factor, other}), domain_error);
}

TEST_CASE("convolution agrees with the direct computation on the direct sum") {
  WeylGroup a1 = WeylGroup::enumerate(RootSystem::build('A', 1));
  OrbitPoint o = orbit_of(a1.root_system(), "1,-1");
  SubalgebraReport factor = generate_subalgebra(a1, o, 4);
  SubalgebraReport convolved = product_subalgebra({factor, factor});

  RootSystem prod = RootSystem::parse("A1xA1");
  WeylGroup w = WeylGroup::enumerate(prod);
  SubalgebraReport direct =
      generate_subalgebra(w, orbit_of(prod, "1,-1,1,-1"), 4);
  CHECK(direct.algebra_dims == convolved.algebra_dims);
  CHECK(direct.invariant_dims == convolved.invariant_dims);
}

TEST_CASE("standard generators by family") {
  RootSystem a1 = RootSystem::build('A', 1);
  auto gens_a1 = standard_generators(a1);
  REQUIRE(gens_a1.size() == 1);
  CHECK(gens_a1[0].first == "c2");
  CHECK(gens_a1[0].second == Poly::var(1, 0).pow(2) * Rat(-1));

  RootSystem d4 = RootSystem::build('D', 4);
  auto gens_d4 = standard_generators(d4);
  REQUIRE(gens_d4.size() == 4);
  CHECK(gens_d4[0].first == "p1");
  CHECK(gens_d4[3].first == "euler");
  Poly euler = Poly::var(4, 0) * Poly::var(4, 1) * Poly::var(4, 2) * Poly::var(4, 3);
  CHECK(gens_d4[3].second == euler);

  RootSystem b2 = RootSystem::build('B', 2);
  auto gens_b2 = standard_generators(b2);
  REQUIRE(gens_b2.size() == 2);
  Poly p1 = Poly::var(2, 0).pow(2) + Poly::var(2, 1).pow(2);
  CHECK(gens_b2[0].second == p1);

  // The generators really are invariant.
  WeylGroup w = WeylGroup::enumerate(d4);
  for (const auto& [name, poly] : gens_d4) CHECK(is_weyl_invariant(w, poly));
}

TEST_CASE("degree-2 part is populated for every face of A2") {
  WeylGroup w = WeylGroup::enumerate(RootSystem::build('A', 2));
  const RootSystem& rs = w.root_system();
  for (const char* xi : {"1,0,-1", "1,1,-2", "2,-1,-1"}) {
    SubalgebraReport r = generate_subalgebra(w, orbit_of(rs, xi), 2);
    CHECK(r.algebra_dims[1] == 0);
    CHECK(r.algebra_dims[2] >= 1);
  }
}
