#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fibint/rational.hpp"
#include "fibint/rootsys.hpp"

namespace fibint {

using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

/// Graded lexicographic order: compare by total degree first, then
/// lexicographically with x1 > x2 > ... . The map below stores terms
/// ascending, so the leading term is the last one.
struct GradedLexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Exact multivariate polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored; the term map is kept in graded-lex
/// order, which makes equality, hashing and printing canonical.
class Poly {
 public:
  using TermMap = std::map<Mono, Rat, GradedLexLess>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Rat& c);
  static Poly one(int nvars) { return constant(nvars, 1); }
  static Poly var(int nvars, int index, int exponent = 1);
  /// The linear form sum_i coeffs[i] * x_i.
  static Poly linear_form(const VecQ& coeffs);
  static Poly linear_form(const VecI& coeffs);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max total degree; the zero polynomial reports -1.
  int degree() const;
  /// Degree if every term has the same total degree (zero counts as any).
  std::optional<int> homogeneous_degree() const;
  Poly homogeneous_part(int d) const;

  void add_term(const Mono& m, const Rat& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly& operator+=(const Poly& o);
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  /// Exponentiation by repeated squaring; pow(p, 0) is the empty product 1.
  Poly pow(int e) const;

  Rat eval(const VecQ& point) const;
  Poly derivative(int var) const;

  /// Applies the ring map x_i -> images[i]; all images share out_nvars.
  Poly compose(const std::vector<Poly>& images, int out_nvars) const;

  /// Human-readable form like "2*x1^2*x2 - 1/3*x3 + 5", leading term first.
  std::string str() const;

 private:
  void check_same_space(const Poly& o) const;

  int nvars_ = 0;
  TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

/// Right action on polynomial functions: (w.p)(x) = p(w^{-1} x). Variables
/// substitute as x_j -> flip[j] * x_{perm[j]}.
Poly apply_weyl(const WeylElement& w, const Poly& p);

/// Sum of sign(w) * (w.p) over the whole group.
Poly antisymmetrize(const WeylGroup& weyl, const Poly& p);

/// Invariant projector: the group average of p. Idempotent, exact.
Poly reynolds(const WeylGroup& weyl, const Poly& p);

/// Exact quotient p / q. Throws integrity_error if the division leaves a
/// remainder and domain_error if q is zero.
Poly exact_divide(const Poly& p, const Poly& q);

/// Restriction to the Cartan subalgebra: substitutes the redundant last
/// coordinate of every A block by minus the sum of the block and reindexes to
/// rs.t_dim() variables. Identity (up to reindexing) for B/C/D.
Poly restrict_to_cartan(const RootSystem& rs, const Poly& p);

bool is_weyl_invariant(const WeylGroup& weyl, const Poly& p);

/// Invariance under the stabilizer reflections of the orbit only.
bool is_parabolic_invariant(const RootSystem& rs, const OrbitPoint& orbit,
                            const Poly& p);

}  // namespace fibint
