#include "assocforge/grt.hpp"

#include <array>
#include <stdexcept>

namespace assocforge {

namespace {

const Permutation& perm132() {
  static const Permutation p{1, 3, 2};
  return p;
}

std::string describe(const EquationReport& r) {
  std::string out;
  for (const auto& f : r.failures) {
    if (!out.empty()) out += ", ";
    out += f.equation + " at degree " + std::to_string(f.degree);
  }
  return out;
}

}  // namespace

GrtElement GrtElement::checked(ChordSeries gamma) {
  const EquationReport report = is_grt_element(gamma, gamma.max_degree());
  if (!report.ok)
    throw std::invalid_argument("not a GRT element: " + describe(report));
  return GrtElement{std::move(gamma)};
}

GrtElement GrtElement::identity(int max_degree) {
  return GrtElement{ChordSeries::one(3, max_degree)};
}

ChordSeries grt_substitute(const ChordSeries& g, const ChordSeries& target) {
  if (g.strands() != 3 || target.strands() != 3)
    throw std::invalid_argument("the substitution lives on 3 strands");
  if (g.max_degree() != target.max_degree())
    throw std::invalid_argument("mixed truncation bounds in substitution");
  if (g.constant_term() != 1)
    throw std::invalid_argument("substitution needs a unit constant term");
  const int M = g.max_degree();

  const ChordSeries inv = inverse_series(g);
  const ChordSeries inv132 = permute(inv, perm132());
  const ChordSeries g132 = permute(g, perm132());
  const ChordSeries t12 = ChordSeries::generator(3, M, 1, 2);
  const ChordSeries t13 = ChordSeries::generator(3, M, 1, 3);
  const ChordSeries t23 = ChordSeries::generator(3, M, 2, 3);

  // Images of the three generators; indexed by the second strand pair.
  const ChordSeries img12 = multiply(multiply(inv, t12), g);
  const ChordSeries img13 = multiply(multiply(inv132, t13), g132);
  const ChordSeries& img23 = t23;

  ChordSeries out(3, M);
  for (const auto& [w, c] : target.terms()) {
    ChordSeries prod = ChordSeries::one(3, M);
    for (const Chord& l : w) {
      const ChordSeries* image = nullptr;
      if (l.i() == 1 && l.j() == 2)
        image = &img12;
      else if (l.i() == 1 && l.j() == 3)
        image = &img13;
      else
        image = &img23;
      prod = multiply(prod, *image);
      if (prod.is_zero()) break;
    }
    out += c * prod;
  }
  return out;
}

GrtElement grt_multiply(const GrtElement& g1, const GrtElement& g2) {
  if (g1.max_degree() != g2.max_degree())
    throw std::invalid_argument("mixed truncation bounds in GRT product");
  return GrtElement::checked(
      multiply(g1.gamma, grt_substitute(g1.gamma, g2.gamma)));
}

AssociatorCandidate grt_act(const GrtElement& g, const AssociatorCandidate& phi) {
  if (g.max_degree() != phi.max_degree())
    throw std::invalid_argument("mixed truncation bounds in GRT action");
  const ChordSeries image = multiply(g.gamma, grt_substitute(g.gamma, phi.phi));
  AssociatorCandidate out(image);
  const EquationReport report = is_associator(out);
  if (!report.ok)
    throw std::logic_error("GRT action left the associator set: " + describe(report));
  return out;
}

GrtLieSolution grt_lie_solutions(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  const DegreeOperators& ops = degree_operators(degree);
  const int dim = static_cast<int>(ops.basis.size());
  RationalMatrix stacked(ops.total_rows(), dim);
  int base = 0;
  for (const RationalMatrix* block :
       {&ops.pentagon, &ops.hexagon, &ops.coproduct, &ops.degeneracy}) {
    for (int r = 0; r < block->rows(); ++r)
      for (const auto& [c, v] : block->row(r)) stacked.set(base + r, c, v);
    base += block->rows();
  }

  GrtLieSolution out;
  out.degree = degree;
  for (const auto& v : stacked.kernel_basis())
    out.basis.push_back(series_from_vector(ops.basis, v, 3, degree));
  return out;
}

namespace {

// Right-hand sides for one correction degree of the group-element solve.
struct GrtSystem {
  AffineSystem system;
};

GrtSystem assemble_grt(const ChordSeries& gamma, int m, const DegreeOperators& ops) {
  const ChordSeries current = gamma.truncated(m);

  const std::vector<Rational> cp =
      vector_over(ops.pentagon_basis, pentagon_residual(current), m);
  const std::vector<Rational> ch =
      vector_over(ops.basis, classical_hexagon_residual(current), m);
  const std::vector<Rational> cg =
      vector_over(ops.coproduct_basis, group_like_residual(current), m);
  const auto s_res = nondegeneracy_residuals(current);

  const int dim = static_cast<int>(ops.basis.size());
  const int rows = ops.total_rows();
  RationalMatrix big(rows, dim);
  std::vector<Rational> rhs(static_cast<size_t>(rows), Rational(0));

  int base = 0;
  auto put_block = [&](const RationalMatrix& block) {
    for (int r = 0; r < block.rows(); ++r)
      for (const auto& [c, v] : block.row(r)) big.set(base + r, c, v);
    base += block.rows();
  };

  put_block(ops.pentagon);  // P x = -cp
  for (size_t k = 0; k < cp.size(); ++k) rhs[k] = -cp[k];

  int off = ops.pentagon.rows();  // H x = +ch (residual is ch - H x)
  put_block(ops.hexagon);
  for (size_t k = 0; k < ch.size(); ++k) rhs[static_cast<size_t>(off) + k] = ch[k];
  off += ops.hexagon.rows();

  put_block(ops.coproduct);  // G x = -cg
  for (size_t k = 0; k < cg.size(); ++k) rhs[static_cast<size_t>(off) + k] = -cg[k];
  off += ops.coproduct.rows();

  put_block(ops.degeneracy);  // s_i x = -cs_i
  const ChordWord t12_power(static_cast<size_t>(m), Chord(1, 2));
  for (int i = 0; i < 3; ++i)
    rhs[static_cast<size_t>(off + i)] =
        -s_res[static_cast<size_t>(i)].coefficient(t12_power);

  return GrtSystem{AffineSystem{std::move(big), std::move(rhs)}};
}

}  // namespace

GrtElement grt_exponentiate(const ChordSeries& gamma_hom, int max_degree) {
  if (gamma_hom.strands() != 3)
    throw std::invalid_argument("Lie solutions live on 3 strands");
  if (gamma_hom.is_zero()) return GrtElement::identity(max_degree);

  const int m = gamma_hom.min_degree();
  ChordSeries hom = gamma_hom.truncated(max_degree);
  if (!(hom.homogeneous_part(m) == hom))
    throw std::invalid_argument("expected a homogeneous Lie solution");

  // Membership in the linearized kernel, checked against the same operator
  // blocks the solver uses.
  {
    const DegreeOperators& ops = degree_operators(m);
    const std::vector<Rational> v = vector_over(ops.basis, hom, m);
    for (const RationalMatrix* block :
         {&ops.pentagon, &ops.hexagon, &ops.coproduct, &ops.degeneracy})
      for (int r = 0; r < block->rows(); ++r) {
        Rational acc(0);
        for (const auto& [c, val] : block->row(r)) acc += val * v[static_cast<size_t>(c)];
        if (acc != 0)
          throw std::invalid_argument(
              "input is not a solution of the linearized equations");
      }
  }

  ChordSeries gamma = exp_series(hom);
  for (int k = m + 1; k <= max_degree; ++k) {
    const DegreeOperators& ops = degree_operators(k);
    GrtSystem sys = assemble_grt(gamma, k, ops);
    bool trivial = true;
    for (const Rational& r : sys.system.rhs)
      if (r != 0) {
        trivial = false;
        break;
      }
    if (trivial) continue;
    auto solved = solve_affine(sys.system);
    if (!solved)
      throw std::logic_error(
          "per-degree GRT system inconsistent; surjectivity guarantees this "
          "cannot happen, so this is a bug");
    gamma += series_from_vector(ops.basis, solved->particular, 3, max_degree);
  }
  return GrtElement::checked(std::move(gamma));
}

}  // namespace assocforge
