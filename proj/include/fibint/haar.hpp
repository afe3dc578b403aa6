#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fibint/pushforward.hpp"
#include "fibint/rational.hpp"

namespace fibint {

/// The compact groups the sampler knows: special unitary and special
/// orthogonal, addressed by labels like "SU2" or "SO3".
struct CompactGroup {
  bool special_unitary = true;
  int n = 2;
  std::string label() const {
    return (special_unitary ? "SU" : "SO") + std::to_string(n);
  }
};

CompactGroup parse_compact_group(const std::string& label);

using CMat = std::vector<std::vector<std::complex<double>>>;

/// The `index`-th Haar-distributed sample for the given seed. Samples are
/// addressed individually so that results are independent of how work is
/// sharded across threads; identical (seed, index) pairs give bit-identical
/// matrices on every platform.
CMat sample_haar_matrix(const CompactGroup& group, std::uint64_t seed,
                        long long index);

/// Monte Carlo estimate of one moment of the pairing <X, g xi g^{-1}> with
/// xi and X embedded as diagonal traceless matrices.
struct MomentEstimate {
  int k = 0;
  double value = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  std::string group;
  VecQ xi;
  VecQ X;
  std::uint64_t seed = 0;
};

/// Estimates all requested powers over a single Haar stream. Sampling is
/// sharded over `threads`; shard sums are combined in index order, so the
/// shard count only perturbs results by floating-point reassociation
/// (documented tolerance 1e-9 relative).
std::vector<MomentEstimate> moment_estimates(const CompactGroup& group, const VecQ& xi,
                                             const VecQ& X, const std::vector<int>& ks,
                                             long long samples, std::uint64_t seed,
                                             int threads = 1);

MomentEstimate moment_estimate(const CompactGroup& group, const VecQ& xi, const VecQ& X,
                               int k, long long samples, std::uint64_t seed,
                               int threads = 1);

struct FitRow {
  int k = 0;
  double symbolic = 0.0;
  double moment = 0.0;
  double std_error = 0.0;
  double binom = 0.0;
  bool symbolic_zero = false;
  /// For nonzero symbolic classes: relative deviation and sigma distance of
  /// the scaled moment from the symbolic value. For vanishing classes: the
  /// sigma distance of the raw moment from zero.
  double deviation_rel = 0.0;
  double sigma = 0.0;
  bool pass = true;
};

/// Consistency report between the symbolic classes and the moment estimates.
/// The binomial factor C(n+k, k) is applied to the numeric side; the ratio
/// of the two sides must then be independent of k. The single fitted
/// constant absorbs the volume and pairing normalizations.
struct FitReport {
  int base_k = 0;
  /// symbolic / (binom * moment), fitted at base_k.
  double c_symbolic_over_numeric = 0.0;
  /// Reciprocal form; equals 1/2 for the SU(2) chain under the conventions
  /// used here.
  double fitted_constant = 0.0;
  double tol_rel = 0.05;
  double tol_sigma = 5.0;
  std::vector<FitRow> rows;
  bool pass = true;
};

/// Requires at least two even k with nonvanishing symbolic classes among the
/// estimates; throws domain_error otherwise (suggesting another evaluation
/// point). X is given in ambient coordinates and must satisfy the same trace
/// conditions as orbit points.
FitReport fit_and_compare(const RootSystem& rs, const CharClassSet& symbolic,
                          const std::vector<MomentEstimate>& estimates, const VecQ& X,
                          double tol_rel = 0.05, double tol_sigma = 5.0);

/// Drops the redundant last coordinate of every A block; the ambient vector
/// must satisfy the block trace conditions.
VecQ restrict_point(const RootSystem& rs, const VecQ& ambient);

}  // namespace fibint
