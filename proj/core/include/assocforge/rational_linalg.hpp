#pragma once

#include <map>
#include <optional>
#include <vector>

#include "assocforge/rational.hpp"

namespace assocforge {

/// Sparse exact-rational matrix. Row-major; no zero entries are stored.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);
  Rational get(int r, int c) const;
  const std::map<int, Rational>& row(int r) const { return rows_data_[static_cast<size_t>(r)]; }

  /// Exact rank via rational Gaussian elimination.
  int rank() const;

  /// Basis of the right null space; size equals cols - rank. The basis is
  /// canonical given the column order: one vector per free column with that
  /// free variable set to 1 and all other free variables 0.
  std::vector<std::vector<Rational>> kernel_basis() const;

  friend RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

 private:
  int rows_;
  int cols_;
  std::vector<std::map<int, Rational>> rows_data_;
};

struct AffineSystem {
  RationalMatrix matrix;
  std::vector<Rational> rhs;
};

struct AffineSolution {
  /// The particular solution with every free variable set to 0; pivots are
  /// the first nonzero in column order, columns processed left to right.
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
};

/// Solves matrix * x = rhs exactly. Inconsistency is a value, not an error.
std::optional<AffineSolution> solve_affine(const AffineSystem& system);

}  // namespace assocforge
