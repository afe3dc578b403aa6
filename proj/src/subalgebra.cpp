#include "fibint/subalgebra.hpp"

#include <algorithm>
#include <set>

#include "fibint/errors.hpp"
#include "fibint/linalg.hpp"

namespace fibint {

std::vector<VecQ> face_span_basis(const RootSystem& rs, const OrbitPoint& orbit) {
  MatQ constraints;
  for (int i : orbit.stabilizer_simples) {
    VecQ row(rs.ambient_dim(), Rat(0));
    for (int c = 0; c < rs.ambient_dim(); ++c) row[c] = rs.simple_roots()[i][c];
    constraints.push_back(row);
  }
  for (const SimpleFactor& f : rs.factors()) {
    if (f.family != 'A') continue;
    VecQ row(rs.ambient_dim(), Rat(0));
    for (int c = f.ambient_offset; c < f.ambient_offset + f.ambient_dim; ++c)
      row[c] = 1;
    constraints.push_back(row);
  }
  std::vector<VecQ> basis;
  if (constraints.empty()) {
    for (int i = 0; i < rs.ambient_dim(); ++i) {
      VecQ v(rs.ambient_dim(), Rat(0));
      v[i] = 1;
      basis.push_back(std::move(v));
    }
  } else {
    basis = nullspace_basis(constraints, rs.ambient_dim());
  }
  if (static_cast<int>(basis.size()) != orbit.face_dim)
    throw integrity_error("face span dimension disagrees with face_dim");
  return basis;
}

namespace {

VecQ combine(const std::vector<VecQ>& basis, const VecI& coeffs) {
  VecQ u(basis.empty() ? 0 : basis[0].size(), Rat(0));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t c = 0; c < u.size(); ++c) u[c] += Rat(coeffs[i]) * basis[i][c];
  }
  return u;
}

// One full closure pass: multiply basis elements of complementary degrees
// and insert, repeating until no degree grows.
void close_under_products(GradedBasis& span, int cutoff) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int d1 = 2; d1 + 2 <= cutoff; ++d1) {
      std::vector<Poly> left = span.basis(d1);
      if (left.empty()) continue;
      for (int d2 = d1; d1 + d2 <= cutoff; ++d2) {
        std::vector<Poly> right = span.basis(d2);
        for (const Poly& a : left)
          for (const Poly& b : right)
            if (span.insert(a * b)) changed = true;
      }
    }
  }
}

struct SeedContext {
  const WeylGroup& weyl;
  const OrbitPoint& orbit;
  int n_fiber;
  std::vector<VecQ> pool_points;  // sampled face-span forms, ambient coordinates
  DetRng tuple_rng;
  SeedMode mode;

  Poly generator(int k, int point_index, GeneratorSample& sample) {
    const RootSystem& rs = weyl.root_system();
    Poly p(rs.ambient_dim());
    if (mode == SeedMode::kPowers) {
      const VecQ& u = pool_points[point_index];
      record(u, sample);
      p = Poly::linear_form(u).pow(n_fiber + k);
    } else {
      p = Poly::one(rs.ambient_dim());
      for (int j = 0; j < n_fiber + k; ++j) {
        int idx = static_cast<int>(tuple_rng.next() % pool_points.size());
        record(pool_points[idx], sample);
        p = p * Poly::linear_form(pool_points[idx]);
      }
    }
    Poly pushed = orbit_pushforward(weyl, orbit, p);
    Poly restricted = restrict_to_cartan(rs, pushed);
    sample.powers_used[k].push_back(restricted);
    return restricted;
  }

  void record(const VecQ& u, GeneratorSample& sample) {
    if (std::find(sample.sample_points.begin(), sample.sample_points.end(), u) ==
        sample.sample_points.end())
      sample.sample_points.push_back(u);
  }
};

}  // namespace

SubalgebraReport generate_subalgebra(const WeylGroup& weyl, const OrbitPoint& orbit,
                                     int cutoff, std::uint64_t seed, SeedMode mode) {
  if (cutoff < 2)
    throw domain_error("cutoff must be >= 2, got " + std::to_string(cutoff));
  const RootSystem& rs = weyl.root_system();
  const int n = fiber_half_dim(rs, orbit);
  const int f = orbit.face_dim;

  SubalgebraReport report;
  report.group = rs.label();
  report.orbit = orbit;
  report.cutoff = cutoff;
  report.sample.seed = seed;
  report.sample.face_basis = face_span_basis(rs, orbit);

  // Enough sample points that the powers of the sampled forms span the full
  // symmetric power at every k, plus safety samples for the saturation probe.
  std::vector<long long> needed(cutoff + 1, 0);
  for (int k = 1; k <= cutoff; ++k) needed[k] = monomial_count(f, n + k);
  const int kMaxExtraRounds = 8;
  int pool_target =
      static_cast<int>(needed[cutoff]) + 2 + 2 * kMaxExtraRounds;
  DetRng rng(seed);
  std::vector<VecI> pool = sample_coefficient_vectors(
      rng, f, pool_target, static_cast<int>(needed[cutoff]));

  SeedContext ctx{weyl,
                  orbit,
                  n,
                  {},
                  DetRng(splitmix64(seed ^ 0xABCDEF0123456789ULL)),
                  mode};
  for (const VecI& c : pool)
    ctx.pool_points.push_back(combine(report.sample.face_basis, c));

  GradedBasis span(rs.t_dim(), cutoff);
  span.insert(Poly::one(rs.t_dim()));

  std::vector<int> next_index(cutoff + 1, 0);
  auto feed = [&](int k, int count) {
    bool grew = false;
    for (int i = 0; i < count; ++i) {
      if (next_index[k] >= static_cast<int>(ctx.pool_points.size())) break;
      Poly g = ctx.generator(k, next_index[k]++, report.sample);
      if (!g.is_zero() && span.insert(g)) grew = true;
    }
    return grew;
  };

  for (int k = 1; k <= cutoff; ++k)
    feed(k, static_cast<int>(std::min<long long>(
               needed[k], static_cast<long long>(ctx.pool_points.size()))));
  close_under_products(span, cutoff);

  // Saturation probe: two more samples per k must not grow any dimension.
  bool grew_last_round = true;
  for (int round = 0; round < kMaxExtraRounds && grew_last_round; ++round) {
    grew_last_round = false;
    for (int k = 1; k <= cutoff; ++k)
      if (feed(k, 2)) grew_last_round = true;
    if (grew_last_round) close_under_products(span, cutoff);
  }
  report.saturated = !grew_last_round;

  report.algebra_dims = span.dims();
  report.invariant_dims = molien_dims(weyl, cutoff);
  for (int d = 0; d <= cutoff; ++d) {
    if (report.algebra_dims[d] > report.invariant_dims[d])
      throw integrity_error("generated subalgebra exceeds the invariant ring "
                            "in degree " + std::to_string(d));
    if (report.algebra_dims[d] < report.invariant_dims[d])
      report.missing_degrees.push_back(d);
  }
  report.full_up_to_cutoff = report.missing_degrees.empty();
  report.basis = std::make_shared<const GradedBasis>(std::move(span));
  return report;
}

IndependenceReport independence_report(const WeylGroup& weyl, const OrbitPoint& orbit,
                                       int k_max, std::uint64_t seed) {
  const RootSystem& rs = weyl.root_system();
  if (k_max < rs.rank())
    throw domain_error("k_max must be at least the rank " +
                       std::to_string(rs.rank()) + ", got " + std::to_string(k_max));
  CharClassSet classes = char_classes(weyl, orbit, k_max);

  IndependenceReport report;
  report.seed = seed;
  report.n_vars = rs.t_dim();
  std::vector<Poly> polys;
  for (int k = 2; k <= k_max; ++k) {
    const Poly& p = classes.classes.at(k);
    if (p.is_zero()) continue;
    polys.push_back(p);
    report.k_used.push_back(k);
  }
  if (polys.empty()) {
    report.rank = 0;
    report.certified = false;
    return report;
  }
  DetRng rng(seed);
  report.points = sample_integer_points(rng, rs.t_dim(), 3);
  report.rank = jacobian_rank(polys, report.points);
  report.certified =
      report.rank == std::min<int>(static_cast<int>(polys.size()), rs.t_dim());
  return report;
}

ContainmentVerdict semicontinuity_check(const WeylGroup& weyl, const OrbitPoint& inner,
                                        const OrbitPoint& outer, int cutoff,
                                        std::uint64_t seed) {
  std::set<int> inner_stab(inner.stabilizer_simples.begin(),
                           inner.stabilizer_simples.end());
  for (int i : outer.stabilizer_simples)
    if (!inner_stab.count(i))
      throw domain_error(
          "nearby orbit must lie on a more generic face: its stabilizer must "
          "be contained in the stabilizer of the first orbit");

  SubalgebraReport inner_rep = generate_subalgebra(weyl, inner, cutoff, seed);
  SubalgebraReport outer_rep = generate_subalgebra(weyl, outer, cutoff, seed);

  ContainmentVerdict verdict;
  for (int d = 0; d <= cutoff; ++d) {
    DegreeContainment row;
    row.degree = d;
    row.dim_inner = inner_rep.algebra_dims[d];
    row.dim_outer = outer_rep.algebra_dims[d];
    row.contained = true;
    for (const Poly& b : inner_rep.basis->basis(d))
      if (!outer_rep.basis->contains(b)) {
        row.contained = false;
        break;
      }
    if (!row.contained && !verdict.first_failing_degree)
      verdict.first_failing_degree = d;
    verdict.contained = verdict.contained && row.contained;
    verdict.per_degree.push_back(row);
  }
  return verdict;
}

SubalgebraReport product_subalgebra(const std::vector<SubalgebraReport>& reports) {
  if (reports.empty())
    throw domain_error("product_subalgebra requires at least one report");
  for (const SubalgebraReport& r : reports)
    if (r.cutoff != reports[0].cutoff)
      throw domain_error("product_subalgebra requires matching cutoffs (" +
                         std::to_string(reports[0].cutoff) + " vs " +
                         std::to_string(r.cutoff) + ")");
  SubalgebraReport out = reports[0];
  out.basis.reset();
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const SubalgebraReport& r = reports[i];
    int cutoff = out.cutoff;
    std::vector<int> a(cutoff + 1, 0);
    std::vector<long long> inv(cutoff + 1, 0);
    for (int d1 = 0; d1 <= cutoff; ++d1)
      for (int d2 = 0; d1 + d2 <= cutoff; ++d2) {
        a[d1 + d2] += out.algebra_dims[d1] * r.algebra_dims[d2];
        inv[d1 + d2] += out.invariant_dims[d1] * r.invariant_dims[d2];
      }
    out.algebra_dims = a;
    out.invariant_dims = inv;
    out.group += "x" + r.group;
    out.orbit.xi.insert(out.orbit.xi.end(), r.orbit.xi.begin(), r.orbit.xi.end());
    out.orbit.face_dim += r.orbit.face_dim;
    out.saturated = out.saturated && r.saturated;
    out.sample.sample_points.clear();
    out.sample.powers_used.clear();
    out.sample.face_basis.clear();
  }
  // Stabilizer indices are not meaningful across factors; recompute lazily by
  // callers who need them. Only dims and fullness are carried.
  out.orbit.stabilizer_simples.clear();
  out.missing_degrees.clear();
  for (int d = 0; d <= out.cutoff; ++d)
    if (out.algebra_dims[d] < out.invariant_dims[d]) out.missing_degrees.push_back(d);
  out.full_up_to_cutoff = out.missing_degrees.empty();
  return out;
}

namespace {

// Elementary symmetric polynomials of the given linear forms.
std::vector<Poly> elementary_symmetric(const std::vector<Poly>& forms, int nvars) {
  std::vector<Poly> e(forms.size() + 1, Poly::zero(nvars));
  e[0] = Poly::one(nvars);
  for (const Poly& x : forms)
    for (int k = static_cast<int>(forms.size()); k >= 1; --k)
      e[k] = e[k] + e[k - 1] * x;
  return e;
}

}  // namespace

std::vector<std::pair<std::string, Poly>> standard_generators(const RootSystem& rs) {
  std::vector<std::pair<std::string, Poly>> out;
  bool composite = rs.factors().size() > 1;
  for (std::size_t fi = 0; fi < rs.factors().size(); ++fi) {
    const SimpleFactor& f = rs.factors()[fi];
    std::string prefix =
        composite ? std::to_string(fi + 1) + ":" : std::string();
    if (f.family == 'A') {
      // e_k of the ambient coordinates, restricted: x_{r+1} = -(x_1+..+x_r).
      std::vector<Poly> vars;
      for (int i = 0; i < f.t_dim; ++i)
        vars.push_back(Poly::var(rs.t_dim(), f.t_offset + i));
      VecQ last(rs.t_dim(), Rat(0));
      for (int i = 0; i < f.t_dim; ++i) last[f.t_offset + i] = -1;
      vars.push_back(Poly::linear_form(last));
      std::vector<Poly> e = elementary_symmetric(vars, rs.t_dim());
      for (int k = 2; k <= f.rank + 1; ++k)
        out.emplace_back(prefix + "c" + std::to_string(k), e[k]);
    } else {
      std::vector<Poly> squares;
      for (int i = 0; i < f.t_dim; ++i) {
        Poly x = Poly::var(rs.t_dim(), f.t_offset + i);
        squares.push_back(x * x);
      }
      std::vector<Poly> e = elementary_symmetric(squares, rs.t_dim());
      int top = (f.family == 'D') ? f.rank - 1 : f.rank;
      for (int k = 1; k <= top; ++k)
        out.emplace_back(prefix + "p" + std::to_string(k), e[k]);
      if (f.family == 'D') {
        Poly euler = Poly::one(rs.t_dim());
        for (int i = 0; i < f.t_dim; ++i)
          euler = euler * Poly::var(rs.t_dim(), f.t_offset + i);
        out.emplace_back(prefix + "euler", euler);
      }
    }
  }
  return out;
}

}  // namespace fibint
