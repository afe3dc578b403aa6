#include "fibint/graded.hpp"

#include <algorithm>

#include "fibint/errors.hpp"
#include "fibint/linalg.hpp"

namespace fibint {

namespace {

void enumerate_monomials(int nvars, int degree, Mono& scratch, int pos,
                         std::vector<Mono>& out) {
  if (pos == nvars - 1) {
    scratch[pos] = degree;
    out.push_back(scratch);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    scratch[pos] = e;
    enumerate_monomials(nvars, degree - e, scratch, pos + 1, out);
  }
}

// All monomials of the given total degree, descending graded-lex.
std::vector<Mono> monomials_of_degree(int nvars, int degree) {
  std::vector<Mono> out;
  Mono scratch(nvars, 0);
  enumerate_monomials(nvars, degree, scratch, 0, out);
  return out;
}

}  // namespace

long long monomial_count(int v, int d) {
  // C(d + v - 1, v - 1)
  long long n = 1;
  for (int i = 1; i <= v - 1; ++i) n = n * (d + i) / i;
  return n;
}

GradedBasis::GradedBasis(int nvars, int max_degree)
    : nvars_(nvars), max_degree_(max_degree) {}

GradedBasis::Block& GradedBasis::block(int degree) const {
  auto it = blocks_.find(degree);
  if (it != blocks_.end()) return it->second;
  Block b;
  b.monomials = monomials_of_degree(nvars_, degree);
  for (std::size_t i = 0; i < b.monomials.size(); ++i)
    b.column[b.monomials[i]] = static_cast<int>(i);
  return blocks_.emplace(degree, std::move(b)).first->second;
}

const GradedBasis::Block* GradedBasis::block_if_built(int degree) const {
  auto it = blocks_.find(degree);
  return it == blocks_.end() ? nullptr : &it->second;
}

VecQ GradedBasis::to_row(const Block& b, const Poly& p) const {
  VecQ row(b.monomials.size(), Rat(0));
  for (const auto& [m, c] : p.terms()) row[b.column.at(m)] = c;
  return row;
}

Poly GradedBasis::from_row(const Block& b, const VecQ& row, int) const {
  Poly p(nvars_);
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) p.add_term(b.monomials[i], row[i]);
  return p;
}

void GradedBasis::reduce_row(const Block& b, VecQ& row) {
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    int p = b.pivots[r];
    if (row[p] == 0) continue;
    Rat f = row[p];
    for (std::size_t c = p; c < row.size(); ++c)
      if (b.rows[r][c] != 0) row[c] -= f * b.rows[r][c];
  }
}

bool GradedBasis::insert(const Poly& p) {
  if (p.is_zero()) return false;
  if (p.nvars() != nvars_)
    throw domain_error("graded basis holds polynomials in " + std::to_string(nvars_) +
                       " variables, got " + std::to_string(p.nvars()));
  auto deg = p.homogeneous_degree();
  if (!deg)
    throw domain_error("graded span requires homogeneous input, got: " +
                       p.str().substr(0, 80));
  if (*deg > max_degree_)
    throw domain_error("degree " + std::to_string(*deg) +
                       " exceeds the basis cutoff " + std::to_string(max_degree_));
  Block& b = block(*deg);
  VecQ row = to_row(b, p);
  reduce_row(b, row);
  int pivot = -1;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) {
      pivot = static_cast<int>(c);
      break;
    }
  if (pivot < 0) return false;
  Rat inv = 1 / row[pivot];
  for (std::size_t c = pivot; c < row.size(); ++c) row[c] *= inv;
  // Back-substitute to keep the block fully reduced.
  for (std::size_t r = 0; r < b.rows.size(); ++r) {
    if (b.rows[r][pivot] == 0) continue;
    Rat f = b.rows[r][pivot];
    for (std::size_t c = pivot; c < row.size(); ++c)
      if (row[c] != 0) b.rows[r][c] -= f * row[c];
  }
  auto at = std::upper_bound(b.pivots.begin(), b.pivots.end(), pivot);
  std::size_t idx = static_cast<std::size_t>(at - b.pivots.begin());
  b.pivots.insert(at, pivot);
  b.rows.insert(b.rows.begin() + idx, std::move(row));
  return true;
}

Poly GradedBasis::reduce(const Poly& p) const {
  Poly out(nvars_);
  int top = p.degree();
  for (int d = 0; d <= top; ++d) {
    Poly part = p.homogeneous_part(d);
    if (part.is_zero()) continue;
    const Block& b = block(d);
    VecQ row = to_row(b, part);
    reduce_row(b, row);
    out += from_row(b, row, d);
  }
  return out;
}

bool GradedBasis::contains(const Poly& p) const { return reduce(p).is_zero(); }

int GradedBasis::dim(int degree) const {
  const Block* b = block_if_built(degree);
  return b ? static_cast<int>(b->rows.size()) : 0;
}

std::vector<int> GradedBasis::dims() const {
  std::vector<int> out(max_degree_ + 1, 0);
  for (int d = 0; d <= max_degree_; ++d) out[d] = dim(d);
  return out;
}

std::vector<Poly> GradedBasis::basis(int degree) const {
  const Block* b = block_if_built(degree);
  std::vector<Poly> out;
  if (!b) return out;
  for (const VecQ& row : b->rows) out.push_back(from_row(*b, row, degree));
  return out;
}

GradedBasis graded_span(int nvars, const std::vector<Poly>& polys, int max_degree) {
  GradedBasis basis(nvars, max_degree);
  for (const Poly& p : polys) basis.insert(p);
  return basis;
}

namespace {

// Truncated power series with rational coefficients.
using Series = std::vector<Rat>;

Series series_inverse(const Series& p, int max_degree) {
  // p[0] must be 1.
  Series inv(max_degree + 1, Rat(0));
  inv[0] = 1;
  for (int k = 1; k <= max_degree; ++k) {
    Rat acc = 0;
    for (int j = 1; j <= k && j < static_cast<int>(p.size()); ++j)
      acc += p[j] * inv[k - j];
    inv[k] = -acc;
  }
  return inv;
}

// det(I - t*w) on the ambient space via the cycle structure of the signed
// permutation: each cycle of length L with sign product s contributes
// (1 - s t^L).
Series ambient_char_series(const WeylElement& w) {
  int m = static_cast<int>(w.perm.size());
  Series det{Rat(1)};
  std::vector<bool> seen(m, false);
  for (int start = 0; start < m; ++start) {
    if (seen[start]) continue;
    int len = 0, s = 1, j = start;
    do {
      seen[j] = true;
      s *= w.flip[j];
      j = w.perm[j];
      ++len;
    } while (j != start);
    Series factor(len + 1, Rat(0));
    factor[0] = 1;
    factor[len] = -s;
    Series prod(det.size() + len, Rat(0));
    for (std::size_t a = 0; a < det.size(); ++a) {
      if (det[a] == 0) continue;
      prod[a] += det[a];
      prod[a + len] -= det[a] * s;
    }
    det = std::move(prod);
  }
  return det;
}

// Exact division by (1 - t); valid because every A-block permutation fixes
// the block-wise all-ones vector.
Series divide_by_one_minus_t(const Series& p) {
  Series q(p.size() > 0 ? p.size() - 1 : 0, Rat(0));
  Rat carry = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    carry += p[k];
    q[k] = carry;
  }
  carry += p.empty() ? Rat(0) : p.back();
  if (carry != 0) throw integrity_error("characteristic series not divisible by 1-t");
  return q;
}

}  // namespace

std::vector<long long> molien_dims(const WeylGroup& weyl, int max_degree) {
  const RootSystem& rs = weyl.root_system();
  int a_factors = 0;
  for (const SimpleFactor& f : rs.factors())
    if (f.family == 'A') ++a_factors;

  Series total(max_degree + 1, Rat(0));
  for (const WeylElement& w : weyl.elements()) {
    Series det = ambient_char_series(w);
    for (int i = 0; i < a_factors; ++i) det = divide_by_one_minus_t(det);
    Series inv = series_inverse(det, max_degree);
    for (int k = 0; k <= max_degree; ++k) total[k] += inv[k];
  }
  std::vector<long long> dims(max_degree + 1, 0);
  Rat order(static_cast<unsigned long>(weyl.order()));
  for (int k = 0; k <= max_degree; ++k) {
    Rat d = total[k] / order;
    if (d.get_den() != 1 || d < 0)
      throw integrity_error("Molien coefficient is not a non-negative integer");
    dims[k] = d.get_num().get_si();
  }
  return dims;
}

int jacobian_rank(const std::vector<Poly>& polys, const std::vector<VecQ>& points) {
  if (polys.empty())
    throw domain_error("jacobian_rank requires at least one polynomial");
  if (points.empty())
    throw domain_error("jacobian_rank requires at least one sample point");
  int nvars = polys[0].nvars();
  for (const Poly& p : polys)
    if (p.nvars() != nvars)
      throw domain_error("jacobian_rank polynomials must share a variable count");

  std::vector<std::vector<Poly>> grads;
  for (const Poly& p : polys) {
    std::vector<Poly> g;
    for (int v = 0; v < nvars; ++v) g.push_back(p.derivative(v));
    grads.push_back(std::move(g));
  }

  int best = 0;
  for (const VecQ& point : points) {
    if (static_cast<int>(point.size()) != nvars)
      throw domain_error("jacobian_rank sample point arity mismatch");
    MatQ jac(polys.size(), VecQ(nvars, Rat(0)));
    for (std::size_t r = 0; r < polys.size(); ++r)
      for (int v = 0; v < nvars; ++v) jac[r][v] = grads[r][v].eval(point);
    best = std::max(best, matrix_rank(std::move(jac)));
  }
  return best;
}

}  // namespace fibint
