#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "assocforge/equations.hpp"
#include "assocforge/rational_linalg.hpp"

namespace assocforge {

struct SolverConfig {
  int target_degree = 4;
  bool even = false;
  std::optional<AssociatorCandidate> seed;  // defaults to 1 at degree 1
};

/// One degree of the iterative construction: the affine-linear system in the
/// homogeneous degree-m correction and its deterministic solution.
struct ExtensionStep {
  int degree = 0;
  int unknown_dimension = 0;
  int constraint_rows = 0;
  int kernel_dimension = 0;
  ChordSeries solution;  // homogeneous of the step degree

  ExtensionStep() : solution(3, 0) {}
};

/// The linearized equation blocks over the degree-m basis on 3 strands.
/// These are shared between the associator solver (where they appear as the
/// linear part of the affine per-degree system), the grt Lie algebra (their
/// joint kernel) and the per-degree kernel reports.
///
///   pentagon:   phi -> d4 phi + d2 phi + d0 phi - d1 phi - d3 phi
///   hexagon:    phi -> phi - phi^{132} + phi^{312}
///   coproduct:  phi -> coproduct(phi) - phi(x)1 - 1(x)phi   (mixed rows)
///   degeneracy: phi -> (s1 phi, s2 phi, s3 phi)
struct DegreeOperators {
  int degree = 0;
  std::vector<ChordWord> basis;           // unknown columns
  std::vector<ChordWord> pentagon_basis;  // pentagon row space (4 strands)
  std::vector<std::pair<ChordWord, ChordWord>> coproduct_basis;
  RationalMatrix pentagon{0, 0};
  RationalMatrix hexagon{0, 0};
  RationalMatrix coproduct{0, 0};
  RationalMatrix degeneracy{0, 0};

  int total_rows() const {
    return pentagon.rows() + hexagon.rows() + coproduct.rows() + degeneracy.rows();
  }
};

/// Builds (and caches) the blocks for one degree.
const DegreeOperators& degree_operators(int degree);

/// Coefficients of the degree-m homogeneous part over a basis listing;
/// throws if the series has a degree-m term outside the basis.
std::vector<Rational> vector_over(const std::vector<ChordWord>& basis,
                                  const ChordSeries& s, int degree);
std::vector<Rational> vector_over(
    const std::vector<std::pair<ChordWord, ChordWord>>& basis,
    const TensorSeries& s, int degree);

/// Extends an associator valid to degree m-1 by one degree. The system is
/// guaranteed consistent; an inconsistent solve throws std::logic_error
/// since it witnesses an implementation bug, not a data error. With `even`
/// set (and an even input) the lift is projected onto its parity-fixed part.
ExtensionStep extend_one_degree(const AssociatorCandidate& phi, bool even = false);

/// (phi + P phi)/2 for the parity automorphism P; an associator again.
AssociatorCandidate symmetrize_even(const AssociatorCandidate& phi);

struct BuildReport {
  std::vector<ExtensionStep> steps;
};

struct BuildResult {
  AssociatorCandidate associator;
  BuildReport report;
};

/// Degree-by-degree construction from the seed (default 1 at degree 1); the
/// result is verified to pass is_associator at the target degree.
BuildResult build_associator(const SolverConfig& config);

}  // namespace assocforge
