#include "fibint/haar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <thread>

#include "fibint/errors.hpp"
#include "fibint/sampling.hpp"

namespace fibint {

CompactGroup parse_compact_group(const std::string& label) {
  if (label.size() < 3)
    throw config_error("malformed compact group label '" + label + "'");
  std::string head;
  head += static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  head += static_cast<char>(std::toupper(static_cast<unsigned char>(label[1])));
  if (head != "SU" && head != "SO")
    throw config_error("unsupported compact group '" + label +
                       "': expected SU<n> or SO<n>");
  for (std::size_t i = 2; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i])))
      throw config_error("malformed compact group label '" + label + "'");
  CompactGroup g;
  g.special_unitary = head == "SU";
  g.n = std::stoi(label.substr(2));
  if (g.n < 2)
    throw config_error("compact group rank must be >= 2, got " + label);
  return g;
}

namespace {

using Cx = std::complex<double>;

// Deterministic standard normals: explicit Box-Muller on top of mt19937_64,
// bit-stable across standard libraries.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t s) : eng_(s) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = unit_open();
    double u2 = unit_open();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  double unit_open() {
    // (0, 1]: never feeds log(0).
    return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

std::uint64_t sample_seed(std::uint64_t seed, long long index) {
  return splitmix64(splitmix64(seed) ^
                    (static_cast<std::uint64_t>(index) * 0x9E3779B97F4A7C15ULL));
}

// Modified Gram-Schmidt with one re-orthogonalization pass. The diagonal of
// R comes out real and positive, which is exactly the convention that makes
// the resulting Q Haar-distributed.
void gram_schmidt(CMat& a) {
  int n = static_cast<int>(a.size());
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        Cx proj{0.0, 0.0};
        for (int r = 0; r < n; ++r) proj += std::conj(a[r][i]) * a[r][j];
        for (int r = 0; r < n; ++r) a[r][j] -= proj * a[r][i];
      }
    }
    double norm = 0.0;
    for (int r = 0; r < n; ++r) norm += std::norm(a[r][j]);
    norm = std::sqrt(norm);
    for (int r = 0; r < n; ++r) a[r][j] /= norm;
  }
}

Cx determinant(CMat m) {
  int n = static_cast<int>(m.size());
  Cx det{1.0, 0.0};
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    if (std::abs(m[pivot][c]) == 0.0) return Cx{0.0, 0.0};
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      Cx f = m[r][c] / m[c][c];
      for (int cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
    }
  }
  return det;
}

}  // namespace

CMat sample_haar_matrix(const CompactGroup& group, std::uint64_t seed,
                        long long index) {
  GaussianStream gauss(sample_seed(seed, index));
  int n = group.n;
  CMat a(n, std::vector<Cx>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      double re = gauss.next();
      double im = group.special_unitary ? gauss.next() : 0.0;
      a[r][c] = Cx{re, im};
    }
  gram_schmidt(a);
  if (group.special_unitary) {
    // Divide the first column by det to land in SU(n); this pushes the Haar
    // measure of U(n) onto the Haar measure of SU(n).
    Cx det = determinant(a);
    for (int r = 0; r < n; ++r) a[r][0] /= det;
  } else {
    double det = determinant(a).real();
    if (det < 0)
      for (int r = 0; r < n; ++r) a[r][n - 1] = -a[r][n - 1];
  }
  return a;
}

std::vector<MomentEstimate> moment_estimates(const CompactGroup& group, const VecQ& xi,
                                             const VecQ& X, const std::vector<int>& ks,
                                             long long samples, std::uint64_t seed,
                                             int threads) {
  if (static_cast<int>(xi.size()) != group.n ||
      static_cast<int>(X.size()) != group.n)
    throw domain_error("xi and X must have " + std::to_string(group.n) +
                       " diagonal entries for " + group.label());
  for (int k : ks)
    if (k < 0) throw domain_error("moment order k must be >= 0, got " + std::to_string(k));
  if (samples < 2) throw domain_error("need at least 2 samples");

  std::vector<double> xi_d(group.n), x_d(group.n);
  for (int i = 0; i < group.n; ++i) {
    xi_d[i] = xi[i].get_d();
    x_d[i] = X[i].get_d();
  }

  int nthreads = std::max(1, threads);
  nthreads = static_cast<int>(
      std::min<long long>(nthreads, std::max<long long>(1, samples)));
  std::size_t nk = ks.size();
  std::vector<std::vector<double>> sums(nthreads, std::vector<double>(nk, 0.0));
  std::vector<std::vector<double>> sumsqs(nthreads, std::vector<double>(nk, 0.0));

  int max_k = 0;
  for (int k : ks) max_k = std::max(max_k, k);
  auto worker = [&](int t, long long lo, long long hi) {
    std::vector<double>& sum = sums[t];
    std::vector<double>& sumsq = sumsqs[t];
    std::vector<double> powers(max_k + 1, 1.0);
    for (long long i = lo; i < hi; ++i) {
      CMat g = sample_haar_matrix(group, seed, i);
      double pairing = 0.0;
      for (int r = 0; r < group.n; ++r) {
        double row = 0.0;
        for (int c = 0; c < group.n; ++c) row += std::norm(g[r][c]) * xi_d[c];
        pairing += x_d[r] * row;
      }
      for (int k = 1; k <= max_k; ++k) powers[k] = powers[k - 1] * pairing;
      for (std::size_t j = 0; j < nk; ++j) {
        double v = powers[ks[j]];
        sum[j] += v;
        sumsq[j] += v * v;
      }
    }
  };

  if (nthreads == 1) {
    worker(0, 0, samples);
  } else {
    std::vector<std::thread> pool;
    long long chunk = (samples + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      long long lo = t * chunk;
      long long hi = std::min<long long>(samples, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, t, lo, hi);
    }
    for (std::thread& th : pool) th.join();
  }

  std::vector<MomentEstimate> out;
  for (std::size_t j = 0; j < nk; ++j) {
    double sum = 0.0, sumsq = 0.0;
    for (int t = 0; t < nthreads; ++t) {
      sum += sums[t][j];
      sumsq += sumsqs[t][j];
    }
    MomentEstimate e;
    e.k = ks[j];
    e.samples = samples;
    e.group = group.label();
    e.xi = xi;
    e.X = X;
    e.seed = seed;
    e.value = sum / static_cast<double>(samples);
    double var = (sumsq - static_cast<double>(samples) * e.value * e.value) /
                 static_cast<double>(samples - 1);
    e.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
    out.push_back(std::move(e));
  }
  return out;
}

MomentEstimate moment_estimate(const CompactGroup& group, const VecQ& xi, const VecQ& X,
                               int k, long long samples, std::uint64_t seed,
                               int threads) {
  return moment_estimates(group, xi, X, {k}, samples, seed, threads)[0];
}

VecQ restrict_point(const RootSystem& rs, const VecQ& ambient) {
  if (static_cast<int>(ambient.size()) != rs.ambient_dim())
    throw domain_error("point arity mismatch for " + rs.label());
  VecQ out(rs.t_dim(), Rat(0));
  for (const SimpleFactor& f : rs.factors()) {
    if (f.family == 'A') {
      Rat sum = 0;
      for (int c = 0; c < f.ambient_dim; ++c) sum += ambient[f.ambient_offset + c];
      if (sum != 0)
        throw domain_error("point must have zero coordinate sum on the " +
                           std::string(1, f.family) + std::to_string(f.rank) +
                           " block");
    }
    for (int c = 0; c < f.t_dim; ++c)
      out[f.t_offset + c] = ambient[f.ambient_offset + c];
  }
  return out;
}

FitReport fit_and_compare(const RootSystem& rs, const CharClassSet& symbolic,
                          const std::vector<MomentEstimate>& estimates, const VecQ& X,
                          double tol_rel, double tol_sigma) {
  FitReport report;
  report.tol_rel = tol_rel;
  report.tol_sigma = tol_sigma;
  VecQ x_restricted = restrict_point(rs, X);
  int n = symbolic.n_fiber;

  auto binom = [&](int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n + i) / i;
    return b;
  };
  auto symbolic_at = [&](int k) -> double {
    auto it = symbolic.classes.find(k);
    if (it == symbolic.classes.end())
      throw domain_error("no symbolic class of degree " + std::to_string(k) +
                         "; raise k_max");
    return it->second.eval(x_restricted).get_d();
  };

  // Base: smallest even k with a nonvanishing symbolic value. The fit needs
  // at least one more even k to say anything about k-independence.
  int even_nonzero = 0;
  int base = -1;
  for (const MomentEstimate& e : estimates) {
    if (e.k % 2 != 0 || e.k < 1) continue;
    if (symbolic_at(e.k) == 0.0) continue;
    ++even_nonzero;
    if (base < 0 || e.k < base) base = e.k;
  }
  if (even_nonzero < 2)
    throw domain_error(
        "need at least two even k with nonvanishing symbolic classes at X; "
        "pick a different evaluation point X");

  const MomentEstimate* base_est = nullptr;
  for (const MomentEstimate& e : estimates)
    if (e.k == base) base_est = &e;
  double sym_base = symbolic_at(base);
  report.base_k = base;
  report.c_symbolic_over_numeric = sym_base / (binom(base) * base_est->value);
  report.fitted_constant = 1.0 / report.c_symbolic_over_numeric;

  for (const MomentEstimate& e : estimates) {
    if (e.k < 1) continue;
    FitRow row;
    row.k = e.k;
    row.moment = e.value;
    row.std_error = e.std_error;
    row.binom = binom(e.k);
    row.symbolic = symbolic_at(e.k);
    row.symbolic_zero = row.symbolic == 0.0;
    if (row.symbolic_zero) {
      row.sigma = e.std_error > 0 ? std::abs(e.value) / e.std_error : 0.0;
      row.pass = row.sigma <= tol_sigma;
    } else {
      double scaled = report.c_symbolic_over_numeric * row.binom * e.value;
      double scaled_se = std::abs(report.c_symbolic_over_numeric) * row.binom * e.std_error;
      double diff = std::abs(row.symbolic - scaled);
      row.deviation_rel = diff / std::abs(row.symbolic);
      row.sigma = scaled_se > 0 ? diff / scaled_se : (diff == 0.0 ? 0.0 : 1e300);
      row.pass = row.deviation_rel <= tol_rel || row.sigma <= tol_sigma;
    }
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const FitRow& a, const FitRow& b) { return a.k < b.k; });
  return report;
}

}  // namespace fibint
