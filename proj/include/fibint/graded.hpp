#pragma once

#include <map>
#include <vector>

#include "fibint/poly.hpp"
#include "fibint/rootsys.hpp"

namespace fibint {

/// Reduced echelon bases of a graded subspace of Q[x_1..x_v], one block per
/// homogeneous degree. Columns are monomials in descending graded-lex order,
/// so pivots are leading monomials and the representation is canonical.
class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(int nvars, int max_degree);

  /// Inserts a homogeneous polynomial, reducing against the existing rows.
  /// Returns true if the dimension of its degree block grew. Throws
  /// domain_error on non-homogeneous input or degree beyond max_degree.
  bool insert(const Poly& p);

  /// Exact membership: every homogeneous part reduces to zero.
  bool contains(const Poly& p) const;

  /// Remainder of p after reduction against the stored rows.
  Poly reduce(const Poly& p) const;

  int dim(int degree) const;
  /// Dimensions for degrees 0..max_degree.
  std::vector<int> dims() const;
  std::vector<Poly> basis(int degree) const;

  int nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }

 private:
  struct Block {
    std::vector<Mono> monomials;  // descending graded-lex
    std::map<Mono, int> column;
    std::vector<VecQ> rows;  // reduced echelon, sorted by pivot column
    std::vector<int> pivots;
  };

  Block& block(int degree) const;
  const Block* block_if_built(int degree) const;
  VecQ to_row(const Block& b, const Poly& p) const;
  Poly from_row(const Block& b, const VecQ& row, int degree) const;
  static void reduce_row(const Block& b, VecQ& row);

  int nvars_ = 0;
  int max_degree_ = 0;
  mutable std::map<int, Block> blocks_;
};

/// Span of a family of homogeneous polynomials, all in `nvars` variables.
GradedBasis graded_span(int nvars, const std::vector<Poly>& polys, int max_degree);

/// Dimensions of the degree-d Weyl-invariant polynomials on the Cartan
/// subalgebra for d = 0..max_degree, from the exact Molien series
/// (1/|W|) sum_w 1/det(I - t w|_t).
std::vector<long long> molien_dims(const WeylGroup& weyl, int max_degree);

/// Max over the sample points of the exact rank of the Jacobian matrix of
/// the given polynomials. Reaching min(#polys, #vars) certifies algebraic
/// independence; a deficient value is only a lower bound for the generic
/// rank. Throws domain_error if polys or points are empty.
int jacobian_rank(const std::vector<Poly>& polys, const std::vector<VecQ>& points);

/// Number of monomials of total degree d in v variables.
long long monomial_count(int v, int d);

}  // namespace fibint
