#pragma once

#include <map>

#include "fibint/poly.hpp"
#include "fibint/rootsys.hpp"

namespace fibint {

/// Product of the positive roots as linear forms; the fundamental
/// anti-invariant. Degree equals the number of positive roots.
Poly discriminant(const RootSystem& rs);

/// Fibre integration for the full flag bundle realized on polynomials:
/// antisymmetrize, then divide exactly by the discriminant. Lowers degree by
/// the number of positive roots; inputs of lower degree map to zero.
Poly flag_pushforward(const WeylGroup& weyl, const Poly& p);

/// Product of the positive roots lying in the span of the orbit's stabilizer
/// simples (the Euler class of the fibre P/T). Empty product for regular
/// orbits.
Poly euler_class_of_parabolic(const RootSystem& rs, const OrbitPoint& orbit);

/// Fibre integration for the orbit bundle G/P, factored through the full
/// flag: push p * Euler(P) forward and divide by |W_P|. Requires p to be
/// invariant under the stabilizer reflections (domain_error otherwise).
Poly orbit_pushforward(const WeylGroup& weyl, const OrbitPoint& orbit,
                       const Poly& p);

/// Degree-2 class of the Borel construction attached to the orbit: the
/// pairing with xi as a linear form. Restricts to the orbit's symplectic
/// class; stabilizer-invariant by construction.
struct CouplingForm {
  OrbitPoint orbit;
  Poly linear_form;
};

CouplingForm coupling_form(const RootSystem& rs, const OrbitPoint& orbit);

/// The family of invariant polynomials attached to one orbit: classes[k] is
/// the fibre integral of the (n_fiber + k)-th power of the coupling form,
/// restricted to Cartan coordinates. Homogeneous of degree k and
/// Weyl-invariant.
struct CharClassSet {
  OrbitPoint orbit;
  int n_fiber = 0;
  std::map<int, Poly> classes;
};

CharClassSet char_classes(const WeylGroup& weyl, const OrbitPoint& orbit,
                          int k_max);

}  // namespace fibint
