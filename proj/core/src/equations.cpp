#include "assocforge/equations.hpp"

#include <stdexcept>

namespace assocforge {

namespace {

const Permutation& perm132() {
  static const Permutation p{1, 3, 2};
  return p;
}
const Permutation& perm312() {
  static const Permutation p{3, 1, 2};
  return p;
}

void require_unit_constant_term(const ChordSeries& x, const char* what) {
  if (x.constant_term() != 1)
    throw std::invalid_argument(std::string(what) + " needs constant term 1");
  if (x.strands() != 3)
    throw std::invalid_argument(std::string(what) + " lives on 3 strands");
}

// First degree (up to max_degree) where the series is nonzero, or -1.
int first_nonzero_degree(const ChordSeries& r) { return r.min_degree(); }

int first_nonzero_degree(const TensorSeries& r) {
  int best = -1;
  for (const auto& [k, c] : r.terms()) {
    const int d = static_cast<int>(k.first.size() + k.second.size());
    if (best < 0 || d < best) best = d;
  }
  return best;
}

template <typename Residual>
void record(EquationReport& report, const std::string& name, const Residual& r) {
  const int d = first_nonzero_degree(r);
  if (d >= 0) {
    report.ok = false;
    report.failures.push_back({name, d});
  }
}

}  // namespace

AssociatorCandidate::AssociatorCandidate(ChordSeries series, bool even_flag)
    : phi(std::move(series)), even(even_flag) {
  require_unit_constant_term(phi, "associator candidate");
  if (even && !(parity(phi) == phi))
    throw std::invalid_argument("candidate flagged even is not parity-fixed");
}

DualChordSeries::DualChordSeries(ChordSeries a0, ChordSeries b0)
    : a(std::move(a0)), b(std::move(b0)) {
  if (a.strands() != b.strands() || a.max_degree() != b.max_degree())
    throw std::invalid_argument("dual parts have mixed shapes");
}

DualChordSeries DualChordSeries::constant(const ChordSeries& a0) {
  return DualChordSeries(a0, ChordSeries::zero(a0.strands(), a0.max_degree()));
}

DualChordSeries DualChordSeries::operator-(const DualChordSeries& o) const {
  return DualChordSeries(a - o.a, b - o.b);
}

DualChordSeries multiply(const DualChordSeries& x, const DualChordSeries& y) {
  return DualChordSeries(multiply(x.a, y.a),
                         multiply(x.a, y.b) + multiply(x.b, y.a));
}

DualChordSeries dual_exp_eps(const ChordSeries& t) {
  return DualChordSeries(ChordSeries::one(t.strands(), t.max_degree()), t);
}

ChordSeries pentagon_residual(const ChordSeries& phi) {
  require_unit_constant_term(phi, "pentagon residual");
  return multiply(multiply(apply_d(4, phi), apply_d(2, phi)), apply_d(0, phi)) -
         multiply(apply_d(1, phi), apply_d(3, phi));
}

ChordSeries hexagon_residual(const ChordSeries& phi, HexagonSign sign) {
  require_unit_constant_term(phi, "hexagon residual");
  const int M = phi.max_degree();
  const Rational h(sign == HexagonSign::plus ? 1 : -1, 2);
  const ChordSeries lhs =
      apply_d(1, exp_series(h * ChordSeries::generator(2, M, 1, 2)));
  const ChordSeries e23 = exp_series(h * ChordSeries::generator(3, M, 2, 3));
  const ChordSeries e13 = exp_series(h * ChordSeries::generator(3, M, 1, 3));
  const ChordSeries inv132 = permute(inverse_series(phi), perm132());
  const ChordSeries rhs = multiply(
      multiply(multiply(multiply(phi, e23), inv132), e13),
      permute(phi, perm312()));
  return lhs - rhs;
}

std::array<ChordSeries, 3> nondegeneracy_residuals(const ChordSeries& phi) {
  if (phi.strands() != 3)
    throw std::invalid_argument("non-degeneracy residuals live on 3 strands");
  const ChordSeries one2 = ChordSeries::one(2, phi.max_degree());
  return {apply_s(1, phi) - one2, apply_s(2, phi) - one2, apply_s(3, phi) - one2};
}

TensorSeries group_like_residual(const ChordSeries& phi) {
  return coproduct(phi) - TensorSeries::product_of(phi, phi);
}

ChordSeries classical_hexagon_residual(const ChordSeries& gamma) {
  require_unit_constant_term(gamma, "classical hexagon residual");
  const ChordSeries inv = inverse_series(gamma);
  return ChordSeries::one(3, gamma.max_degree()) -
         multiply(multiply(gamma, permute(inv, perm132())),
                  permute(gamma, perm312()));
}

ChordSeries cabling_residual(const ChordSeries& gamma) {
  require_unit_constant_term(gamma, "cabling residual");
  const int M = gamma.max_degree();
  const ChordSeries t12_two = ChordSeries::generator(2, M, 1, 2);
  const ChordSeries t12 = ChordSeries::generator(3, M, 1, 2);
  const ChordSeries conj = multiply(multiply(inverse_series(gamma), t12), gamma);
  return apply_d(2, t12_two) - (conj + permute(conj, perm132()));
}

ChordSeries semiclassical_hexagon_residual(const ChordSeries& gamma) {
  require_unit_constant_term(gamma, "semi-classical hexagon residual");
  const int M = gamma.max_degree();
  const ChordSeries t12_two = ChordSeries::generator(2, M, 1, 2);
  const ChordSeries t13 = ChordSeries::generator(3, M, 1, 3);
  const ChordSeries t23 = ChordSeries::generator(3, M, 2, 3);
  const ChordSeries inv132 = permute(inverse_series(gamma), perm132());
  const ChordSeries middle = multiply(t23, inv132) + multiply(inv132, t13);
  return apply_d(1, t12_two) -
         multiply(multiply(gamma, middle), permute(gamma, perm312()));
}

DualChordSeries quantum_hexagon_residual(const ChordSeries& gamma) {
  require_unit_constant_term(gamma, "quantum hexagon residual");
  const int M = gamma.max_degree();
  const ChordSeries t13 = ChordSeries::generator(3, M, 1, 3);
  const ChordSeries t23 = ChordSeries::generator(3, M, 2, 3);
  const DualChordSeries lhs = dual_exp_eps(t13 + t23);
  DualChordSeries rhs = DualChordSeries::constant(gamma);
  rhs = multiply(rhs, dual_exp_eps(t23));
  rhs = multiply(rhs, DualChordSeries::constant(permute(inverse_series(gamma), perm132())));
  rhs = multiply(rhs, dual_exp_eps(t13));
  rhs = multiply(rhs, DualChordSeries::constant(permute(gamma, perm312())));
  return lhs - rhs;
}

EquationReport is_associator(const ChordSeries& phi, int max_degree) {
  EquationReport report;
  if (phi.strands() != 3 || phi.constant_term() != 1) {
    report.ok = false;
    report.failures.push_back({"unit constant term on 3 strands", 0});
    return report;
  }
  const ChordSeries p = phi.truncated(max_degree);
  record(report, "pentagon", pentagon_residual(p));
  record(report, "hexagon+", hexagon_residual(p, HexagonSign::plus));
  record(report, "hexagon-", hexagon_residual(p, HexagonSign::minus));
  const auto s = nondegeneracy_residuals(p);
  record(report, "s1", s[0]);
  record(report, "s2", s[1]);
  record(report, "s3", s[2]);
  record(report, "group-like", group_like_residual(p));
  return report;
}

EquationReport is_grt_element(const ChordSeries& gamma, int max_degree) {
  EquationReport report;
  if (gamma.strands() != 3 || gamma.constant_term() != 1) {
    report.ok = false;
    report.failures.push_back({"unit constant term on 3 strands", 0});
    return report;
  }
  const ChordSeries g = gamma.truncated(max_degree);
  record(report, "pentagon", pentagon_residual(g));
  record(report, "classical hexagon", classical_hexagon_residual(g));
  // The semi-classical and cabling forms are equivalent modulo the other
  // relations; both are recorded rather than assuming the equivalence.
  record(report, "semi-classical hexagon", semiclassical_hexagon_residual(g));
  record(report, "cabling", cabling_residual(g));
  const auto s = nondegeneracy_residuals(g);
  record(report, "s1", s[0]);
  record(report, "s2", s[1]);
  record(report, "s3", s[2]);
  record(report, "group-like", group_like_residual(g));
  return report;
}

}  // namespace assocforge
