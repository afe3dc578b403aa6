#include "fibint/linalg.hpp"

namespace fibint {

namespace {

// In-place reduced row echelon form; returns pivot column per row.
std::vector<int> rref(MatQ& m, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < ncols && row < static_cast<int>(m.size()); ++col) {
    int sel = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    Rat inv = 1 / m[row][col];
    for (int c = col; c < ncols; ++c) m[row][c] *= inv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(MatQ m) {
  if (m.empty()) return 0;
  int ncols = static_cast<int>(m[0].size());
  return static_cast<int>(rref(m, ncols).size());
}

VecQ primitive_integer_form(const VecQ& v) {
  mpz_class den_lcm = 1;
  for (const Rat& q : v) {
    mpz_class d = q.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  mpz_class num_gcd = 0;
  VecQ scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = v[i] * Rat(den_lcm);
    mpz_class n = scaled[i].get_num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return scaled;
  int lead_sign = 0;
  for (const Rat& q : scaled) {
    if (q != 0) {
      lead_sign = sgn(q) > 0 ? 1 : -1;
      break;
    }
  }
  Rat scale = Rat(lead_sign) / Rat(num_gcd);
  for (Rat& q : scaled) q *= scale;
  return scaled;
}

std::vector<VecQ> nullspace_basis(const MatQ& m, int ncols) {
  MatQ a = m;
  std::vector<int> pivots = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<VecQ> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    VecQ v(ncols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(primitive_integer_form(v));
  }
  return basis;
}

}  // namespace fibint
