#pragma once

#include <array>
#include <string>
#include <vector>

#include "assocforge/chord_algebra.hpp"
#include "assocforge/cosimplicial.hpp"

namespace assocforge {

/// A 3-strand series with constant term 1, proposed as an associator up to
/// its truncation degree.
struct AssociatorCandidate {
  ChordSeries phi;
  bool even = false;

  explicit AssociatorCandidate(ChordSeries series, bool even_flag = false);
  int max_degree() const { return phi.max_degree(); }

  bool operator==(const AssociatorCandidate& o) const { return phi == o.phi; }
};

/// a + eps*b with eps^2 = 0; enough dual-number arithmetic for the quantum
/// hexagon.
struct DualChordSeries {
  ChordSeries a;  // eps^0 part
  ChordSeries b;  // eps^1 part

  DualChordSeries(ChordSeries a0, ChordSeries b0);
  static DualChordSeries constant(const ChordSeries& a0);

  DualChordSeries operator-(const DualChordSeries& o) const;
  bool operator==(const DualChordSeries& o) const { return a == o.a && b == o.b; }
};

DualChordSeries multiply(const DualChordSeries& x, const DualChordSeries& y);
/// exp(eps * t) = 1 + eps t.
DualChordSeries dual_exp_eps(const ChordSeries& t);

/// d4 P . d2 P . d0 P - d1 P . d3 P on 4 strands; zero iff the pentagon
/// holds to the truncation degree.
ChordSeries pentagon_residual(const ChordSeries& phi);

enum class HexagonSign { plus, minus };

/// d1 exp(+-t12/2) - P exp(+-t23/2) (P^-1)^{132} exp(+-t13/2) P^{312}.
ChordSeries hexagon_residual(const ChordSeries& phi, HexagonSign sign);

/// s_i(phi) - 1 for i = 1, 2, 3, each on 2 strands.
std::array<ChordSeries, 3> nondegeneracy_residuals(const ChordSeries& phi);

/// coproduct(phi) - phi (x) phi.
TensorSeries group_like_residual(const ChordSeries& phi);

/// 1 - G (G^-1)^{132} G^{312}.
ChordSeries classical_hexagon_residual(const ChordSeries& gamma);

/// d2 t12 - (G^-1 t12 G + (G^-1 t12 G)^{132}).
ChordSeries cabling_residual(const ChordSeries& gamma);

/// d1 t12 - G (t23 (G^-1)^{132} + (G^-1)^{132} t13) G^{312}.
ChordSeries semiclassical_hexagon_residual(const ChordSeries& gamma);

/// Residual of e^{eps(t13+t23)} = G e^{eps t23} (G^-1)^{132} e^{eps t13} G^{312}
/// over dual coefficients; the eps^0 part is the classical hexagon residual
/// and the eps^1 part the semi-classical one.
DualChordSeries quantum_hexagon_residual(const ChordSeries& gamma);

struct EquationFailure {
  std::string equation;
  int degree;  // first failing degree
};

struct EquationReport {
  bool ok = true;
  std::vector<EquationFailure> failures;
};

/// Checks all associator axioms up to `max_degree` (pentagon, both hexagons,
/// non-degeneracy, group-likeness, unit constant term).
EquationReport is_associator(const ChordSeries& phi, int max_degree);
inline EquationReport is_associator(const AssociatorCandidate& c) {
  return is_associator(c.phi, c.max_degree());
}

/// Checks GRT membership up to `max_degree`: pentagon, classical hexagon,
/// semi-classical hexagon and the cabling equation (both recorded), group-
/// likeness and non-degeneracy.
EquationReport is_grt_element(const ChordSeries& gamma, int max_degree);

}  // namespace assocforge
