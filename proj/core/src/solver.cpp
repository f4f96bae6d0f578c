#include "assocforge/solver.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

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

struct WordHash {
  size_t operator()(const ChordWord& w) const {
    size_t h = 1469598103934665603ull;
    for (const Chord& c : w) {
      h = (h ^ c.low) * 1099511628211ull;
      h = (h ^ c.high) * 1099511628211ull;
    }
    return h;
  }
};

using WordIndex = std::unordered_map<ChordWord, int, WordHash>;

WordIndex index_of(const std::vector<ChordWord>& basis) {
  WordIndex idx;
  idx.reserve(basis.size());
  for (size_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k], static_cast<int>(k));
  return idx;
}

DegreeOperators build_degree_operators(int m) {
  DegreeOperators ops;
  ops.degree = m;
  ops.basis = basis_words(3, m);
  ops.pentagon_basis = basis_words(4, m);
  for (int d1 = 1; d1 < m; ++d1)
    for (const ChordWord& l : basis_words(3, d1))
      for (const ChordWord& r : basis_words(3, m - d1)) ops.coproduct_basis.emplace_back(l, r);

  const int dim = static_cast<int>(ops.basis.size());
  const WordIndex idx4 = index_of(ops.pentagon_basis);

  std::map<std::pair<ChordWord, ChordWord>, int> pair_index;
  for (size_t k = 0; k < ops.coproduct_basis.size(); ++k)
    pair_index.emplace(ops.coproduct_basis[k], static_cast<int>(k));

  ops.pentagon = RationalMatrix(static_cast<int>(ops.pentagon_basis.size()), dim);
  ops.hexagon = RationalMatrix(dim, dim);
  ops.coproduct = RationalMatrix(static_cast<int>(ops.coproduct_basis.size()), dim);
  ops.degeneracy = RationalMatrix(3, dim);

  const WordIndex idx3 = index_of(ops.basis);
  const ChordSeries one3 = ChordSeries::one(3, m);

  for (int col = 0; col < dim; ++col) {
    const ChordSeries e =
        ChordSeries::monomial(ChordMonomial(3, ops.basis[static_cast<size_t>(col)]), m);

    ChordSeries pent(4, m);
    for (int i = 0; i <= 4; ++i) {
      const ChordSeries im = apply_d(i, e);
      if (i % 2 == 0)
        pent += im;
      else
        pent -= im;
    }
    for (const auto& [w, c] : pent.terms()) ops.pentagon.add(idx4.at(w), col, c);

    const ChordSeries hex = e - permute(e, perm132()) + permute(e, perm312());
    for (const auto& [w, c] : hex.terms()) ops.hexagon.add(idx3.at(w), col, c);

    const TensorSeries cop = coproduct(e) - TensorSeries::product_of(e, one3) -
                             TensorSeries::product_of(one3, e);
    for (const auto& [k, c] : cop.terms()) ops.coproduct.add(pair_index.at(k), col, c);

    for (int i = 1; i <= 3; ++i) {
      const ChordSeries si = apply_s(i, e);
      for (const auto& [w, c] : si.terms()) {
        if (static_cast<int>(w.size()) != m)
          throw std::logic_error("degeneracy image is not degree-preserving");
        ops.degeneracy.add(i - 1, col, c);  // target space is 1-dimensional
      }
    }
  }
  return ops;
}

}  // namespace

const DegreeOperators& degree_operators(int degree) {
  static std::mutex mu;
  static std::map<int, DegreeOperators> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(degree);
  if (it == cache.end()) it = cache.emplace(degree, build_degree_operators(degree)).first;
  return it->second;
}

std::vector<Rational> vector_over(const std::vector<ChordWord>& basis,
                                  const ChordSeries& s, int degree) {
  const WordIndex idx = index_of(basis);
  std::vector<Rational> v(basis.size(), Rational(0));
  for (const auto& [w, c] : s.terms()) {
    if (static_cast<int>(w.size()) != degree) continue;
    auto it = idx.find(w);
    if (it == idx.end()) throw std::logic_error("term outside the expected basis");
    v[static_cast<size_t>(it->second)] = c;
  }
  return v;
}

std::vector<Rational> vector_over(
    const std::vector<std::pair<ChordWord, ChordWord>>& basis,
    const TensorSeries& s, int degree) {
  std::map<std::pair<ChordWord, ChordWord>, int> idx;
  for (size_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k], static_cast<int>(k));
  std::vector<Rational> v(basis.size(), Rational(0));
  for (const auto& [k, c] : s.terms()) {
    if (static_cast<int>(k.first.size() + k.second.size()) != degree) continue;
    if (k.first.empty() || k.second.empty()) {
      if (c != 0) throw std::logic_error("unexpected pure tensor component");
      continue;
    }
    auto it = idx.find(k);
    if (it == idx.end()) throw std::logic_error("tensor term outside the expected basis");
    v[static_cast<size_t>(it->second)] = c;
  }
  return v;
}

namespace {

// Stacks the operator blocks (hexagon twice: once per sign) and the
// right-hand sides derived from the residuals of the current candidate.
struct AssembledSystem {
  AffineSystem system;
  int rows;
};

AssembledSystem assemble(const AssociatorCandidate& phi, int m,
                         const DegreeOperators& ops) {
  const ChordSeries current = phi.phi.truncated(m);

  const std::vector<Rational> cp =
      vector_over(ops.pentagon_basis, pentagon_residual(current), m);
  const std::vector<Rational> chp =
      vector_over(ops.basis, hexagon_residual(current, HexagonSign::plus), m);
  const std::vector<Rational> chm =
      vector_over(ops.basis, hexagon_residual(current, HexagonSign::minus), m);
  const std::vector<Rational> cg =
      vector_over(ops.coproduct_basis, group_like_residual(current), m);
  const auto s_res = nondegeneracy_residuals(current);

  const int dim = static_cast<int>(ops.basis.size());
  const int rows = ops.total_rows() + ops.hexagon.rows();
  RationalMatrix big(rows, dim);
  std::vector<Rational> rhs(static_cast<size_t>(rows), Rational(0));

  int base = 0;
  auto put_block = [&](const RationalMatrix& block) {
    for (int r = 0; r < block.rows(); ++r)
      for (const auto& [c, v] : block.row(r)) big.set(base + r, c, v);
    base += block.rows();
  };

  // pentagon: residual_m(phi + x) = cp + P x  =>  P x = -cp
  put_block(ops.pentagon);
  for (size_t k = 0; k < cp.size(); ++k) rhs[k] = -cp[k];

  // hexagons: residual_m(phi + x) = ch - H x  =>  H x = ch (per sign)
  int off = ops.pentagon.rows();
  put_block(ops.hexagon);
  for (size_t k = 0; k < chp.size(); ++k) rhs[static_cast<size_t>(off) + k] = chp[k];
  off += ops.hexagon.rows();
  put_block(ops.hexagon);
  for (size_t k = 0; k < chm.size(); ++k) rhs[static_cast<size_t>(off) + k] = chm[k];
  off += ops.hexagon.rows();

  // coproduct: residual_m = cg + G x  =>  G x = -cg
  put_block(ops.coproduct);
  for (size_t k = 0; k < cg.size(); ++k) rhs[static_cast<size_t>(off) + k] = -cg[k];
  off += ops.coproduct.rows();

  // degeneracies: residual_m = cs_i + s_i x  =>  s_i x = -cs_i
  put_block(ops.degeneracy);
  const ChordWord t12_power(static_cast<size_t>(m), Chord(1, 2));
  for (int i = 0; i < 3; ++i)
    rhs[static_cast<size_t>(off + i)] = -s_res[static_cast<size_t>(i)].coefficient(t12_power);

  return AssembledSystem{AffineSystem{std::move(big), std::move(rhs)}, rows};
}

bool satisfies(const AffineSystem& sys, const std::vector<Rational>& x) {
  for (int r = 0; r < sys.matrix.rows(); ++r) {
    Rational acc(0);
    for (const auto& [c, v] : sys.matrix.row(r)) acc += v * x[static_cast<size_t>(c)];
    if (acc != sys.rhs[static_cast<size_t>(r)]) return false;
  }
  return true;
}

}  // namespace

ExtensionStep extend_one_degree(const AssociatorCandidate& phi, bool even) {
  const int m = phi.max_degree() + 1;
  const DegreeOperators& ops = degree_operators(m);
  AssembledSystem assembled = assemble(phi, m, ops);

  auto solved = solve_affine(assembled.system);
  if (!solved)
    throw std::logic_error(
        "per-degree associator system inconsistent; this cannot happen for a "
        "valid candidate and indicates a bug");

  std::vector<Rational> coeffs = solved->particular;
  if (even) {
    if (!phi.even && !(parity(phi.phi) == phi.phi))
      throw std::invalid_argument("even extension requires an even candidate");
    // Parity on a homogeneous degree-m piece is (-1)^m, so the projection
    // (x + Px)/2 either keeps the lift or replaces it by zero.
    if (m % 2 == 1) {
      for (auto& c : coeffs) c = 0;
      if (!satisfies(assembled.system, coeffs))
        throw std::logic_error("even projection left the affine solution set");
    }
  }

  ExtensionStep step;
  step.degree = m;
  step.unknown_dimension = static_cast<int>(ops.basis.size());
  step.constraint_rows = assembled.rows;
  step.kernel_dimension = static_cast<int>(solved->kernel.size());
  step.solution = series_from_vector(ops.basis, coeffs, 3, m);
  return step;
}

AssociatorCandidate symmetrize_even(const AssociatorCandidate& phi) {
  const EquationReport check = is_associator(phi);
  if (!check.ok)
    throw std::invalid_argument("symmetrize_even needs a valid associator");
  const ChordSeries averaged = Rational(1, 2) * (phi.phi + parity(phi.phi));
  return AssociatorCandidate(averaged, true);
}

BuildResult build_associator(const SolverConfig& config) {
  if (config.target_degree < 1)
    throw std::invalid_argument("target degree must be at least 1");

  AssociatorCandidate current =
      config.seed.value_or(AssociatorCandidate(ChordSeries::one(3, 1), config.even));
  if (config.seed) {
    const EquationReport seed_check = is_associator(current);
    if (!seed_check.ok)
      throw std::invalid_argument("seed fails the associator axioms at its degree");
    if (config.even && !(parity(current.phi) == current.phi))
      throw std::invalid_argument("even construction requires an even seed");
  }
  if (current.max_degree() > config.target_degree)
    throw std::invalid_argument("seed degree exceeds the target degree");

  BuildReport report;
  while (current.max_degree() < config.target_degree) {
    ExtensionStep step = extend_one_degree(current, config.even);
    report.steps.push_back(step);
    const ChordSeries next = current.phi.truncated(step.degree) + step.solution;
    current = AssociatorCandidate(next, config.even);
  }

  const EquationReport final_check = is_associator(current);
  if (!final_check.ok)
    throw std::logic_error("constructed candidate fails verification; bug");
  return BuildResult{current, std::move(report)};
}

}  // namespace assocforge
