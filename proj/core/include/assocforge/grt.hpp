#pragma once

#include <vector>

#include "assocforge/equations.hpp"
#include "assocforge/solver.hpp"

namespace assocforge {

/// A group element at the working truncation: a 3-strand series with
/// constant term 1 passing pentagon, classical and semi-classical hexagon,
/// cabling, group-likeness and non-degeneracy up to the truncation degree.
struct GrtElement {
  ChordSeries gamma;

  int max_degree() const { return gamma.max_degree(); }
  bool operator==(const GrtElement& o) const { return gamma == o.gamma; }

  /// Validates membership; throws std::invalid_argument when an equation
  /// fails.
  static GrtElement checked(ChordSeries gamma);
  static GrtElement identity(int max_degree);
};

/// The substitution underlying the group law and the action:
///   t12 -> g^-1 t12 g,  t13 -> (g^-1)^{132} t13 g^{132},  t23 -> t23,
/// applied letterwise to the normal-form expansion of `target`.
ChordSeries grt_substitute(const ChordSeries& g, const ChordSeries& target);

/// Group law: g1 x g2 = g1 . (g2 with the substitution by g1). Note this is
/// not the algebra product; the two differ from degree 6 on.
GrtElement grt_multiply(const GrtElement& g1, const GrtElement& g2);

/// Left action on associators: g(phi) = g . (phi with the substitution by
/// g); the result is verified to be an associator.
AssociatorCandidate grt_act(const GrtElement& g, const AssociatorCandidate& phi);

/// Homogeneous solutions of the linearized defining equations at one degree:
/// the joint kernel of {linearized pentagon, gamma - gamma^{132} +
/// gamma^{312}, primitivity, s_i gamma = 0}.
struct GrtLieSolution {
  int degree = 0;
  std::vector<ChordSeries> basis;
};

GrtLieSolution grt_lie_solutions(int degree);

/// Integrates a homogeneous Lie solution to a group element valid to
/// max_degree, correcting degree by degree with the same affine-solve
/// pattern as the associator construction.
GrtElement grt_exponentiate(const ChordSeries& gamma_hom, int max_degree);

}  // namespace assocforge
