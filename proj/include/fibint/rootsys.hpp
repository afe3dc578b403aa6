#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibint/rational.hpp"

namespace fibint {

using VecI = std::vector<int>;

constexpr std::size_t kDefaultWeylCap = 100000;

/// One classical simple factor inside a (possibly composite) root system.
/// Ambient coordinates are the usual epsilon coordinates: an A_r factor uses
/// r+1 of them, B/C/D_r factors use r. Restricted ("Cartan") coordinates drop
/// the redundant last coordinate of each A factor.
struct SimpleFactor {
  char family = 'A';
  int rank = 0;
  int ambient_offset = 0;
  int ambient_dim = 0;
  int t_offset = 0;
  int t_dim = 0;
};

/// Classical root datum in epsilon coordinates. Roots are integer vectors in
/// the ambient space; composite systems concatenate coordinate blocks.
class RootSystem {
 public:
  /// Standard realizations: A uses e_i - e_{i+1}; B adds e_r; C adds 2 e_r;
  /// D adds e_{r-1} + e_r. Throws config_error for unsupported input
  /// (family outside ABCD, rank < 1, D with rank < 3).
  static RootSystem build(char family, int rank);

  /// Parses labels like "A2", "d4" or the product form "A1xA1xB2".
  static RootSystem parse(const std::string& label);

  static RootSystem direct_sum(const RootSystem& a, const RootSystem& b);

  const std::string& label() const { return label_; }
  const std::vector<SimpleFactor>& factors() const { return factors_; }
  bool is_simple() const { return factors_.size() == 1; }

  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  /// Dimension of the Cartan subalgebra; equals rank().
  int t_dim() const { return rank_; }

  const std::vector<VecI>& simple_roots() const { return simple_roots_; }
  const std::vector<VecI>& positive_roots() const { return positive_roots_; }
  /// positive_in_simple()[p][i] = coefficient of simple root i in positive
  /// root p; always a non-negative integer.
  const std::vector<VecI>& positive_in_simple() const { return positive_in_simple_; }

  unsigned long long weyl_order() const { return weyl_order_; }

 private:
  std::string label_;
  std::vector<SimpleFactor> factors_;
  int rank_ = 0;
  int ambient_dim_ = 0;
  std::vector<VecI> simple_roots_;
  std::vector<VecI> positive_roots_;
  std::vector<VecI> positive_in_simple_;
  unsigned long long weyl_order_ = 1;
};

/// Weyl group element stored as a signed permutation of the ambient
/// coordinates: w(e_j) = flip[j] * e_{perm[j]}.
struct WeylElement {
  VecI perm;
  VecI flip;
  /// Determinant of w restricted to the Cartan subalgebra.
  int sign = 1;

  static WeylElement identity(int ambient_dim);

  /// Composition this∘other (apply other first).
  WeylElement compose(const WeylElement& other) const;
  WeylElement inverse() const;

  VecI apply(const VecI& v) const;
  VecQ apply(const VecQ& v) const;

  /// Dense matrix form, rows indexed by output coordinate.
  std::vector<VecQ> matrix() const;

  bool operator==(const WeylElement& o) const {
    return perm == o.perm && flip == o.flip;
  }
};

WeylElement simple_reflection(const RootSystem& rs, int simple_index);

/// The full Weyl group, enumerated once and shared by the symbolic
/// operations. Immutable after construction.
class WeylGroup {
 public:
  /// Closure of the simple reflections under composition. Throws
  /// resource_error if the group order exceeds `cap`.
  static WeylGroup enumerate(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

  const RootSystem& root_system() const { return rs_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  RootSystem rs_;
  std::vector<WeylElement> elements_;
};

/// Order of the parabolic subgroup generated by the given simple reflections.
unsigned long long parabolic_weyl_order(const RootSystem& rs,
                                        const std::vector<int>& simples);

/// Sign of w recomputed from the count of positive roots mapped to negative
/// roots; agrees with WeylElement::sign.
int inversion_sign(const RootSystem& rs, const WeylElement& w);

/// A dominant point of the coadjoint space together with its face data.
/// stabilizer_simples lists the simple roots pairing to zero with xi;
/// face_dim is the dimension of the open face of the Weyl chamber containing
/// xi, which equals dim H^2 of the corresponding orbit.
struct OrbitPoint {
  VecQ xi;
  std::vector<int> stabilizer_simples;
  int face_dim = 0;
};

/// Validates xi (dominant, in the Cartan dual, nonzero on every factor) and
/// computes its face data. Throws domain_error otherwise.
OrbitPoint classify_orbit(const RootSystem& rs, const VecQ& xi);

/// Number of positive roots of the parabolic sub-root-system spanned by the
/// orbit's stabilizer simples.
int parabolic_positive_count(const RootSystem& rs, const OrbitPoint& orbit);

/// Half the real dimension of the orbit: positive roots outside the
/// stabilizer parabolic.
int fiber_half_dim(const RootSystem& rs, const OrbitPoint& orbit);

}  // namespace fibint
