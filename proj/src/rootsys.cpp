#include "fibint/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>

#include "fibint/errors.hpp"
#include "fibint/linalg.hpp"

namespace fibint {

namespace {

unsigned long long saturating_mul(unsigned long long a, unsigned long long b) {
  if (a != 0 && b > std::numeric_limits<unsigned long long>::max() / a)
    return std::numeric_limits<unsigned long long>::max();
  return a * b;
}

unsigned long long factor_weyl_order(char family, int rank) {
  unsigned long long o = 1;
  for (int i = 2; i <= rank + 1; ++i) {
    if (family != 'A' && i == rank + 1) break;
    o = saturating_mul(o, static_cast<unsigned long long>(i));
  }
  if (family == 'B' || family == 'C') {
    for (int i = 0; i < rank; ++i) o = saturating_mul(o, 2ULL);
  } else if (family == 'D') {
    for (int i = 0; i < rank - 1; ++i) o = saturating_mul(o, 2ULL);
  }
  return o;
}

VecI unit(int dim, int i, int value = 1) {
  VecI v(dim, 0);
  v[i] = value;
  return v;
}

// Expansion of v in the basis given by the columns; exact solve. The basis
// vectors are linearly independent by construction.
VecI solve_in_basis(const std::vector<VecI>& basis, const VecI& v) {
  int dim = static_cast<int>(v.size());
  int n = static_cast<int>(basis.size());
  MatQ aug(dim, VecQ(n + 1, Rat(0)));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < n; ++c) aug[r][c] = basis[c][r];
    aug[r][n] = v[r];
  }
  // Forward elimination with partial pivot by first nonzero.
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && row < dim; ++col) {
    int sel = -1;
    for (int r = row; r < dim; ++r)
      if (aug[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(aug[row], aug[sel]);
    Rat inv = 1 / aug[row][col];
    for (int c = col; c <= n; ++c) aug[row][c] *= inv;
    for (int r = 0; r < dim; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      Rat f = aug[r][col];
      for (int c = col; c <= n; ++c) aug[r][c] -= f * aug[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  VecI out(n, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    const Rat& q = aug[r][n];
    if (q.get_den() != 1)
      throw integrity_error("root expansion is not integral");
    out[pivot_col[r]] = static_cast<int>(q.get_num().get_si());
  }
  return out;
}

bool is_negative_root(const VecI& v) {
  for (int x : v) {
    if (x != 0) return x < 0;
  }
  return false;
}

Rat dot_qi(const VecQ& a, const VecI& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace

RootSystem RootSystem::build(char family, int rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  if (family != 'A' && family != 'B' && family != 'C' && family != 'D')
    throw config_error(std::string("unsupported family '") + family +
                       "': expected one of A, B, C, D");
  if (rank < 1)
    throw config_error("rank must be >= 1, got " + std::to_string(rank));
  if (family == 'D' && rank < 3)
    throw config_error("family D requires rank >= 3, got " + std::to_string(rank));

  RootSystem rs;
  int m = (family == 'A') ? rank + 1 : rank;
  rs.label_ = std::string(1, family) + std::to_string(rank);
  rs.factors_ = {SimpleFactor{family, rank, 0, m, 0, rank}};
  rs.rank_ = rank;
  rs.ambient_dim_ = m;

  for (int i = 0; i + 1 < m; ++i) {
    VecI a(m, 0);
    a[i] = 1;
    a[i + 1] = -1;
    rs.simple_roots_.push_back(a);
  }
  switch (family) {
    case 'A':
      break;
    case 'B':
      rs.simple_roots_.push_back(unit(m, m - 1));
      break;
    case 'C':
      rs.simple_roots_.push_back(unit(m, m - 1, 2));
      break;
    case 'D': {
      VecI a(m, 0);
      a[m - 2] = 1;
      a[m - 1] = 1;
      rs.simple_roots_.push_back(a);
      break;
    }
  }

  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      VecI diff(m, 0);
      diff[i] = 1;
      diff[j] = -1;
      rs.positive_roots_.push_back(diff);
      if (family == 'B' || family == 'C' || family == 'D') {
        VecI sum(m, 0);
        sum[i] = 1;
        sum[j] = 1;
        rs.positive_roots_.push_back(sum);
      }
    }
  }
  if (family == 'B')
    for (int i = 0; i < m; ++i) rs.positive_roots_.push_back(unit(m, i));
  if (family == 'C')
    for (int i = 0; i < m; ++i) rs.positive_roots_.push_back(unit(m, i, 2));

  for (const VecI& p : rs.positive_roots_)
    rs.positive_in_simple_.push_back(solve_in_basis(rs.simple_roots_, p));
  rs.weyl_order_ = factor_weyl_order(family, rank);
  return rs;
}

RootSystem RootSystem::parse(const std::string& label) {
  std::vector<RootSystem> parts;
  std::size_t pos = 0;
  while (pos < label.size()) {
    std::size_t next = label.find_first_of("xX*", pos);
    std::string piece =
        next == std::string::npos ? label.substr(pos) : label.substr(pos, next - pos);
    if (piece.size() < 2)
      throw config_error("malformed root system label '" + label + "'");
    char fam = piece[0];
    for (std::size_t i = 1; i < piece.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(piece[i])))
        throw config_error("malformed root system label '" + label + "'");
    parts.push_back(build(fam, std::stoi(piece.substr(1))));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.empty()) throw config_error("empty root system label");
  RootSystem out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
  return out;
}

RootSystem RootSystem::direct_sum(const RootSystem& a, const RootSystem& b) {
  RootSystem rs;
  rs.label_ = a.label_ + "x" + b.label_;
  rs.rank_ = a.rank_ + b.rank_;
  rs.ambient_dim_ = a.ambient_dim_ + b.ambient_dim_;
  rs.factors_ = a.factors_;
  for (SimpleFactor f : b.factors_) {
    f.ambient_offset += a.ambient_dim_;
    f.t_offset += a.rank_;
    rs.factors_.push_back(f);
  }
  auto embed = [&](const VecI& v, int offset) {
    VecI w(rs.ambient_dim_, 0);
    for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
    return w;
  };
  for (const VecI& r : a.simple_roots_) rs.simple_roots_.push_back(embed(r, 0));
  for (const VecI& r : b.simple_roots_)
    rs.simple_roots_.push_back(embed(r, a.ambient_dim_));
  int nsa = static_cast<int>(a.simple_roots_.size());
  int nsb = static_cast<int>(b.simple_roots_.size());
  for (std::size_t p = 0; p < a.positive_roots_.size(); ++p) {
    rs.positive_roots_.push_back(embed(a.positive_roots_[p], 0));
    VecI c = a.positive_in_simple_[p];
    c.resize(nsa + nsb, 0);
    rs.positive_in_simple_.push_back(c);
  }
  for (std::size_t p = 0; p < b.positive_roots_.size(); ++p) {
    rs.positive_roots_.push_back(embed(b.positive_roots_[p], a.ambient_dim_));
    VecI c(nsa, 0);
    for (int x : b.positive_in_simple_[p]) c.push_back(x);
    rs.positive_in_simple_.push_back(c);
  }
  rs.weyl_order_ = saturating_mul(a.weyl_order_, b.weyl_order_);
  return rs;
}

WeylElement WeylElement::identity(int ambient_dim) {
  WeylElement w;
  w.perm.resize(ambient_dim);
  w.flip.assign(ambient_dim, 1);
  for (int i = 0; i < ambient_dim; ++i) w.perm[i] = i;
  w.sign = 1;
  return w;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  WeylElement out;
  int m = static_cast<int>(perm.size());
  out.perm.resize(m);
  out.flip.resize(m);
  for (int j = 0; j < m; ++j) {
    out.perm[j] = perm[other.perm[j]];
    out.flip[j] = other.flip[j] * flip[other.perm[j]];
  }
  out.sign = sign * other.sign;
  return out;
}

WeylElement WeylElement::inverse() const {
  WeylElement out;
  int m = static_cast<int>(perm.size());
  out.perm.resize(m);
  out.flip.resize(m);
  for (int j = 0; j < m; ++j) {
    out.perm[perm[j]] = j;
    out.flip[perm[j]] = flip[j];
  }
  out.sign = sign;
  return out;
}

VecI WeylElement::apply(const VecI& v) const {
  VecI out(v.size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j) out[perm[j]] = flip[j] * v[j];
  return out;
}

VecQ WeylElement::apply(const VecQ& v) const {
  VecQ out(v.size(), Rat(0));
  for (std::size_t j = 0; j < v.size(); ++j) {
    out[perm[j]] = v[j];
    if (flip[j] < 0) out[perm[j]] = -out[perm[j]];
  }
  return out;
}

std::vector<VecQ> WeylElement::matrix() const {
  int m = static_cast<int>(perm.size());
  std::vector<VecQ> rows(m, VecQ(m, Rat(0)));
  for (int j = 0; j < m; ++j) rows[perm[j]][j] = flip[j];
  return rows;
}

WeylElement simple_reflection(const RootSystem& rs, int simple_index) {
  if (simple_index < 0 ||
      simple_index >= static_cast<int>(rs.simple_roots().size()))
    throw domain_error("simple root index out of range: " +
                       std::to_string(simple_index));
  const VecI& alpha = rs.simple_roots()[simple_index];
  WeylElement w = WeylElement::identity(rs.ambient_dim());
  int i = -1, j = -1;
  for (int c = 0; c < rs.ambient_dim(); ++c) {
    if (alpha[c] == 0) continue;
    if (i < 0)
      i = c;
    else
      j = c;
  }
  if (j < 0) {
    // alpha = e_i or 2 e_i: sign flip.
    w.flip[i] = -1;
  } else if (alpha[i] * alpha[j] < 0) {
    // alpha = e_i - e_j: transposition.
    std::swap(w.perm[i], w.perm[j]);
  } else {
    // alpha = e_i + e_j: transposition with both signs flipped.
    std::swap(w.perm[i], w.perm[j]);
    w.flip[i] = -1;
    w.flip[j] = -1;
  }
  w.sign = -1;
  return w;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t cap) {
  if (rs.weyl_order() > cap)
    throw resource_error("Weyl group of " + rs.label() + " has order " +
                         std::to_string(rs.weyl_order()) +
                         " which exceeds the enumeration cap " + std::to_string(cap));
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i < rs.simple_roots().size(); ++i)
    gens.push_back(simple_reflection(rs, static_cast<int>(i)));

  auto key = [](const WeylElement& w) {
    VecI k = w.perm;
    k.insert(k.end(), w.flip.begin(), w.flip.end());
    return k;
  };

  WeylGroup g;
  g.rs_ = rs;
  std::set<VecI> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(rs.ambient_dim())};
  seen.insert(key(frontier[0]));
  g.elements_.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier) {
      for (const WeylElement& s : gens) {
        WeylElement c = s.compose(w);
        if (seen.insert(key(c)).second) {
          if (seen.size() > cap)
            throw resource_error("Weyl enumeration exceeded cap " +
                                 std::to_string(cap));
          g.elements_.push_back(c);
          next.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  if (g.elements_.size() != rs.weyl_order())
    throw integrity_error("Weyl enumeration produced " +
                          std::to_string(g.elements_.size()) +
                          " elements, expected " + std::to_string(rs.weyl_order()));
  return g;
}

unsigned long long parabolic_weyl_order(const RootSystem& rs,
                                        const std::vector<int>& simples) {
  std::vector<WeylElement> gens;
  for (int i : simples) gens.push_back(simple_reflection(rs, i));
  if (gens.empty()) return 1;
  auto key = [](const WeylElement& w) {
    VecI k = w.perm;
    k.insert(k.end(), w.flip.begin(), w.flip.end());
    return k;
  };
  std::set<VecI> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(rs.ambient_dim())};
  seen.insert(key(frontier[0]));
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier)
      for (const WeylElement& s : gens) {
        WeylElement c = s.compose(w);
        if (seen.insert(key(c)).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

OrbitPoint classify_orbit(const RootSystem& rs, const VecQ& xi) {
  if (static_cast<int>(xi.size()) != rs.ambient_dim())
    throw domain_error("xi has " + std::to_string(xi.size()) +
                       " coordinates, expected " + std::to_string(rs.ambient_dim()) +
                       " for " + rs.label());
  for (const SimpleFactor& f : rs.factors()) {
    bool all_zero = true;
    Rat sum = 0;
    for (int c = f.ambient_offset; c < f.ambient_offset + f.ambient_dim; ++c) {
      sum += xi[c];
      if (xi[c] != 0) all_zero = false;
    }
    if (f.family == 'A' && sum != 0)
      throw domain_error("xi must have zero coordinate sum on the " +
                         std::string(1, f.family) + std::to_string(f.rank) +
                         " block (sum = " + rational_str(sum) + ")");
    if (all_zero)
      throw domain_error("xi vanishes on the " + std::string(1, f.family) +
                         std::to_string(f.rank) +
                         " block; the zero orbit is a point and has no orbit data");
  }

  OrbitPoint orbit;
  orbit.xi = xi;
  for (std::size_t i = 0; i < rs.simple_roots().size(); ++i) {
    Rat pairing = dot_qi(xi, rs.simple_roots()[i]);
    if (pairing < 0)
      throw domain_error(
          "xi is not dominant: pairing with simple root alpha_" +
          std::to_string(i + 1) + " is " + rational_str(pairing) +
          " < 0; apply a Weyl element to move xi into the closed chamber first");
    if (pairing == 0) orbit.stabilizer_simples.push_back(static_cast<int>(i));
  }

  // face_dim = dim of the W_P-fixed subspace of the Cartan dual, computed as
  // the kernel of the stabilizer pairings plus the A-block trace conditions.
  MatQ constraints;
  for (int i : orbit.stabilizer_simples) {
    VecQ row(rs.ambient_dim(), Rat(0));
    for (int c = 0; c < rs.ambient_dim(); ++c)
      row[c] = rs.simple_roots()[i][c];
    constraints.push_back(row);
  }
  for (const SimpleFactor& f : rs.factors()) {
    if (f.family != 'A') continue;
    VecQ row(rs.ambient_dim(), Rat(0));
    for (int c = f.ambient_offset; c < f.ambient_offset + f.ambient_dim; ++c)
      row[c] = 1;
    constraints.push_back(row);
  }
  int kernel_dim = constraints.empty()
                       ? rs.ambient_dim()
                       : rs.ambient_dim() - matrix_rank(constraints);
  orbit.face_dim = kernel_dim;
  return orbit;
}

int parabolic_positive_count(const RootSystem& rs, const OrbitPoint& orbit) {
  std::vector<bool> in_stab(rs.simple_roots().size(), false);
  for (int i : orbit.stabilizer_simples) in_stab[i] = true;
  int count = 0;
  for (const VecI& expansion : rs.positive_in_simple()) {
    bool inside = true;
    for (std::size_t i = 0; i < expansion.size(); ++i)
      if (expansion[i] != 0 && !in_stab[i]) {
        inside = false;
        break;
      }
    if (inside) ++count;
  }
  return count;
}

int fiber_half_dim(const RootSystem& rs, const OrbitPoint& orbit) {
  return static_cast<int>(rs.positive_roots().size()) -
         parabolic_positive_count(rs, orbit);
}

// Exposed for tests and property checks: the sign of w via the count of
// positive roots sent to negative roots.
int inversion_sign(const RootSystem& rs, const WeylElement& w) {
  int inversions = 0;
  for (const VecI& root : rs.positive_roots())
    if (is_negative_root(w.apply(root))) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace fibint
