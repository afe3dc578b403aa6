#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibint/graded.hpp"
#include "fibint/poly.hpp"
#include "fibint/pushforward.hpp"
#include "fibint/rootsys.hpp"
#include "fibint/sampling.hpp"

namespace fibint {

/// Basis of the subspace of the Cartan dual fixed by the orbit's stabilizer
/// reflections (the span of the orbit's face). Length equals face_dim;
/// vectors are canonical primitive integer forms in ambient coordinates.
std::vector<VecQ> face_span_basis(const RootSystem& rs, const OrbitPoint& orbit);

/// How the degree-2 generators are sampled: powers of single face-span forms
/// or products of several distinct forms. The two must span the same
/// subalgebra; kProducts exists to check that.
enum class SeedMode { kPowers, kProducts };

struct GeneratorSample {
  std::vector<VecQ> face_basis;
  std::vector<VecQ> sample_points;
  std::map<int, std::vector<Poly>> powers_used;
  std::uint64_t seed = kDefaultSeed;
};

/// Per-degree comparison of the generated subalgebra against the full
/// invariant ring up to the cutoff. Fullness is only ever asserted up to the
/// cutoff.
struct SubalgebraReport {
  std::string group;
  OrbitPoint orbit;
  int cutoff = 0;
  std::vector<int> algebra_dims;
  std::vector<long long> invariant_dims;
  bool full_up_to_cutoff = false;
  std::vector<int> missing_degrees;
  GeneratorSample sample;
  bool saturated = true;
  /// Echelon bases of the generated subalgebra; null for reports assembled
  /// by convolution (product_subalgebra).
  std::shared_ptr<const GradedBasis> basis;
};

/// Seeds the graded span with pushforwards of sampled face-span powers for
/// k = 1..cutoff, closes under products degree by degree until stable, and
/// compares against the Molien dimensions.
SubalgebraReport generate_subalgebra(const WeylGroup& weyl, const OrbitPoint& orbit,
                                     int cutoff, std::uint64_t seed = kDefaultSeed,
                                     SeedMode mode = SeedMode::kPowers);

struct IndependenceReport {
  int rank = 0;
  /// True when the rank reached min(#classes, #vars); lower values are a
  /// bound, never a proof of dependence.
  bool certified = false;
  std::vector<int> k_used;
  int n_vars = 0;
  std::vector<VecQ> points;
  std::uint64_t seed = kDefaultSeed;
};

/// Jacobian rank of the nonzero classes k = 2..k_max at sampled integer
/// points. Requires k_max >= rank of the root system.
IndependenceReport independence_report(const WeylGroup& weyl, const OrbitPoint& orbit,
                                       int k_max, std::uint64_t seed = kDefaultSeed);

struct DegreeContainment {
  int degree = 0;
  int dim_inner = 0;
  int dim_outer = 0;
  bool contained = true;
};

struct ContainmentVerdict {
  bool contained = true;
  std::optional<int> first_failing_degree;
  std::vector<DegreeContainment> per_degree;
};

/// Checks that every basis element of the subalgebra of `inner` reduces to
/// zero against the subalgebra of `outer`, degree by degree up to the
/// cutoff. Requires the stabilizer of `outer` to be contained in that of
/// `inner` (outer lies on a more generic face).
ContainmentVerdict semicontinuity_check(const WeylGroup& weyl, const OrbitPoint& inner,
                                        const OrbitPoint& outer, int cutoff,
                                        std::uint64_t seed = kDefaultSeed);

/// Tensor-product report: dimensions are the convolutions of the factor
/// dimensions. All reports must share a cutoff.
SubalgebraReport product_subalgebra(const std::vector<SubalgebraReport>& reports);

/// Named generators of the invariant ring in restricted coordinates:
/// elementary symmetric polynomials for A (Chern classes, up to the sign
/// convention noted in the CLI output), elementary symmetric in squares for
/// B/C/D (Pontryagin), plus the Euler product for D.
std::vector<std::pair<std::string, Poly>> standard_generators(const RootSystem& rs);

}  // namespace fibint
