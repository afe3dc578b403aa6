#include "fibint/pushforward.hpp"

#include "fibint/errors.hpp"

namespace fibint {

Poly discriminant(const RootSystem& rs) {
  Poly out = Poly::one(rs.ambient_dim());
  for (const VecI& root : rs.positive_roots())
    out = out * Poly::linear_form(root);
  return out;
}

Poly flag_pushforward(const WeylGroup& weyl, const Poly& p) {
  const RootSystem& rs = weyl.root_system();
  if (p.nvars() != rs.ambient_dim())
    throw domain_error("flag_pushforward expects " +
                       std::to_string(rs.ambient_dim()) + " ambient variables");
  Poly anti = antisymmetrize(weyl, p);
  if (anti.is_zero()) return Poly::zero(p.nvars());
  return exact_divide(anti, discriminant(rs));
}

Poly euler_class_of_parabolic(const RootSystem& rs, const OrbitPoint& orbit) {
  std::vector<bool> in_stab(rs.simple_roots().size(), false);
  for (int i : orbit.stabilizer_simples) in_stab[i] = true;
  Poly out = Poly::one(rs.ambient_dim());
  for (std::size_t p = 0; p < rs.positive_roots().size(); ++p) {
    const VecI& expansion = rs.positive_in_simple()[p];
    bool inside = true;
    for (std::size_t i = 0; i < expansion.size(); ++i)
      if (expansion[i] != 0 && !in_stab[i]) {
        inside = false;
        break;
      }
    if (inside) out = out * Poly::linear_form(rs.positive_roots()[p]);
  }
  return out;
}

Poly orbit_pushforward(const WeylGroup& weyl, const OrbitPoint& orbit,
                       const Poly& p) {
  const RootSystem& rs = weyl.root_system();
  if (!is_parabolic_invariant(rs, orbit, p))
    throw domain_error(
        "orbit_pushforward input is not invariant under the stabilizer "
        "reflections of the orbit");
  Poly lifted = p * euler_class_of_parabolic(rs, orbit);
  Poly pushed = flag_pushforward(weyl, lifted);
  unsigned long long wp = parabolic_weyl_order(rs, orbit.stabilizer_simples);
  return pushed * Rat(1, static_cast<unsigned long>(wp));
}

CouplingForm coupling_form(const RootSystem& rs, const OrbitPoint& orbit) {
  if (static_cast<int>(orbit.xi.size()) != rs.ambient_dim())
    throw domain_error("orbit xi arity mismatch");
  return CouplingForm{orbit, Poly::linear_form(orbit.xi)};
}

CharClassSet char_classes(const WeylGroup& weyl, const OrbitPoint& orbit,
                          int k_max) {
  if (k_max < 1)
    throw domain_error("k_max must be >= 1, got " + std::to_string(k_max));
  const RootSystem& rs = weyl.root_system();
  CharClassSet set;
  set.orbit = orbit;
  set.n_fiber = fiber_half_dim(rs, orbit);

  Poly ell = coupling_form(rs, orbit).linear_form;
  Poly power = ell.pow(set.n_fiber);
  for (int k = 1; k <= k_max; ++k) {
    power = power * ell;
    Poly cls = orbit_pushforward(weyl, orbit, power);
    if (!cls.is_zero()) {
      auto deg = cls.homogeneous_degree();
      if (!deg || *deg != k)
        throw integrity_error("class " + std::to_string(k) +
                              " has unexpected degree");
      if (!is_weyl_invariant(weyl, cls))
        throw integrity_error("class " + std::to_string(k) +
                              " is not Weyl-invariant");
    }
    set.classes[k] = restrict_to_cartan(rs, cls);
  }
  return set;
}

}  // namespace fibint
