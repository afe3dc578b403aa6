#include "fibint/poly.hpp"

#include <algorithm>

#include "fibint/errors.hpp"

namespace fibint {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  if (c != 0) p.terms_[Mono(nvars, 0)] = c;
  return p;
}

Poly Poly::var(int nvars, int index, int exponent) {
  if (index < 0 || index >= nvars)
    throw domain_error("variable index " + std::to_string(index) +
                       " out of range for " + std::to_string(nvars) + " variables");
  Poly p(nvars);
  Mono m(nvars, 0);
  m[index] = exponent;
  p.terms_[m] = 1;
  return p;
}

Poly Poly::linear_form(const VecQ& coeffs) {
  Poly p(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Mono m(coeffs.size(), 0);
    m[i] = 1;
    p.terms_[m] = coeffs[i];
  }
  return p;
}

Poly Poly::linear_form(const VecI& coeffs) {
  VecQ q(coeffs.begin(), coeffs.end());
  return linear_form(q);
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return mono_degree(terms_.rbegin()->first);
}

std::optional<int> Poly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = mono_degree(terms_.begin()->first);
  if (mono_degree(terms_.rbegin()->first) != d) return std::nullopt;
  return d;
}

Poly Poly::homogeneous_part(int d) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) == d) out.terms_[m] = c;
  return out;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (static_cast<int>(m.size()) != nvars_)
    throw domain_error("monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Poly::check_same_space(const Poly& o) const {
  if (nvars_ != o.nvars_)
    throw domain_error("polynomial operands live in different variable counts (" +
                       std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + ")");
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  check_same_space(o);
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_space(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_same_space(o);
  Poly out(nvars_);
  Mono prod(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) prod[i] = ma[i] + mb[i];
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

Poly Poly::operator*(const Rat& c) const {
  Poly out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, coef] : terms_) out.terms_[m] = coef * c;
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw domain_error("negative polynomial power " + std::to_string(e));
  Poly result = Poly::one(nvars_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = (e >>= 1) ? base * base : base;
  }
  return result;
}

Rat Poly::eval(const VecQ& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw domain_error("evaluation point arity mismatch");
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int e = 0; e < m[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

Poly Poly::derivative(int var) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    out.add_term(d, c * m[var]);
  }
  return out;
}

Poly Poly::compose(const std::vector<Poly>& images, int out_nvars) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw domain_error("compose expects one image per variable");
  // Power tables keep repeated substitution of the same variable cheap.
  std::vector<std::vector<Poly>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(Poly::one(out_nvars));

  Poly out(out_nvars);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(out_nvars, c);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      while (static_cast<int>(powers[i].size()) <= m[i])
        powers[i].push_back(powers[i].back() * images[i]);
      term = term * powers[i][m[i]];
    }
    out += term;
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c < 0;
    Rat abs = negative ? Rat(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string coef = rational_str(abs);
    bool has_vars = mono_degree(m) > 0;
    if (!has_vars || coef != "1") {
      out += coef;
      if (has_vars) out += "*";
    }
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first) out += "*";
      first = false;
      out += "x" + std::to_string(i + 1);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

Poly apply_weyl(const WeylElement& w, const Poly& p) {
  if (static_cast<int>(w.perm.size()) != p.nvars())
    throw domain_error("Weyl element acts on " + std::to_string(w.perm.size()) +
                       " coordinates but polynomial has " + std::to_string(p.nvars()));
  Poly out(p.nvars());
  Mono image(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    std::fill(image.begin(), image.end(), 0);
    bool negate = false;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      image[w.perm[j]] = m[j];
      if (w.flip[j] < 0 && (m[j] & 1)) negate = !negate;
    }
    out.add_term(image, negate ? Rat(-c) : c);
  }
  return out;
}

Poly antisymmetrize(const WeylGroup& weyl, const Poly& p) {
  Poly out(p.nvars());
  for (const WeylElement& w : weyl.elements()) {
    Poly moved = apply_weyl(w, p);
    out += (w.sign > 0) ? moved : -moved;
  }
  return out;
}

Poly reynolds(const WeylGroup& weyl, const Poly& p) {
  Poly out(p.nvars());
  for (const WeylElement& w : weyl.elements()) out += apply_weyl(w, p);
  return out * Rat(1, static_cast<unsigned long>(weyl.order()));
}

Poly exact_divide(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw domain_error("division by the zero polynomial");
  if (p.nvars() != q.nvars())
    throw domain_error("exact_divide operands live in different variable counts");
  Poly rem = p;
  Poly quot(p.nvars());
  const auto& qlead = *q.terms().rbegin();
  Mono factor(p.nvars());
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    bool divisible = true;
    for (int i = 0; i < p.nvars(); ++i) {
      factor[i] = rlead.first[i] - qlead.first[i];
      if (factor[i] < 0) {
        divisible = false;
        break;
      }
    }
    if (!divisible)
      throw integrity_error(
          "exact division left a nonzero remainder; leading part: " +
          rem.str().substr(0, 80));
    Rat coef = rlead.second / qlead.second;
    Poly piece(p.nvars());
    piece.add_term(factor, coef);
    quot += piece;
    rem = rem - piece * q;
  }
  return quot;
}

Poly restrict_to_cartan(const RootSystem& rs, const Poly& p) {
  if (p.nvars() != rs.ambient_dim())
    throw domain_error("restrict_to_cartan expects a polynomial in " +
                       std::to_string(rs.ambient_dim()) + " ambient variables");
  std::vector<Poly> images;
  images.reserve(rs.ambient_dim());
  for (const SimpleFactor& f : rs.factors()) {
    for (int local = 0; local < f.ambient_dim; ++local) {
      if (f.family == 'A' && local == f.ambient_dim - 1) {
        VecQ coeffs(rs.t_dim(), Rat(0));
        for (int i = 0; i < f.t_dim; ++i) coeffs[f.t_offset + i] = -1;
        images.push_back(Poly::linear_form(coeffs));
      } else {
        images.push_back(Poly::var(rs.t_dim(), f.t_offset + local));
      }
    }
  }
  return p.compose(images, rs.t_dim());
}

bool is_weyl_invariant(const WeylGroup& weyl, const Poly& p) {
  for (std::size_t i = 0; i < weyl.root_system().simple_roots().size(); ++i) {
    WeylElement s = simple_reflection(weyl.root_system(), static_cast<int>(i));
    if (!(apply_weyl(s, p) == p)) return false;
  }
  return true;
}

bool is_parabolic_invariant(const RootSystem& rs, const OrbitPoint& orbit,
                            const Poly& p) {
  for (int i : orbit.stabilizer_simples) {
    WeylElement s = simple_reflection(rs, i);
    if (!(apply_weyl(s, p) == p)) return false;
  }
  return true;
}

}  // namespace fibint
