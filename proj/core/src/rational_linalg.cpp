#include "assocforge/rational_linalg.hpp"

#include <stdexcept>

namespace assocforge {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), rows_data_(static_cast<size_t>(rows)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

void RationalMatrix::set(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  if (v == 0)
    rows_data_[static_cast<size_t>(r)].erase(c);
  else
    rows_data_[static_cast<size_t>(r)][c] = v;
}

void RationalMatrix::add(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  auto& row = rows_data_[static_cast<size_t>(r)];
  auto [it, fresh] = row.try_emplace(c, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

Rational RationalMatrix::get(int r, int c) const {
  const auto& row = rows_data_[static_cast<size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

namespace {

using SparseRow = std::map<int, Rational>;

// row -= factor * pivot_row; factor is taken by value because the caller's
// reference typically lives inside `row` and dies mid-loop
void eliminate(SparseRow& row, const Rational factor, const SparseRow& pivot_row) {
  for (const auto& [c, v] : pivot_row) {
    auto [it, fresh] = row.try_emplace(c, -factor * v);
    if (!fresh) {
      it->second -= factor * v;
      if (it->second == 0) row.erase(it);
    }
  }
}

struct Echelon {
  std::vector<SparseRow> rows;    // reduced row-echelon rows, in pivot order
  std::vector<int> pivot_cols;    // pivot column of each echelon row
};

// Deterministic reduced row echelon form: columns left to right, pivot = the
// first remaining row (in input order) with a nonzero entry in the column.
Echelon reduce(std::vector<SparseRow> rows, int cols) {
  Echelon e;
  size_t done = 0;  // rows [0, done) hold pivots
  for (int col = 0; col < cols; ++col) {
    size_t pivot = done;
    while (pivot < rows.size() && !rows[pivot].count(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[done], rows[pivot]);

    SparseRow& prow = rows[done];
    const Rational inv = 1 / prow.at(col);
    if (inv != 1)
      for (auto& [c, v] : prow) v *= inv;

    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == done) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      eliminate(rows[r], it->second, prow);
    }
    e.pivot_cols.push_back(col);
    ++done;
  }
  rows.resize(done);
  e.rows = std::move(rows);
  return e;
}

std::vector<SparseRow> copy_rows(const RationalMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(static_cast<size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

std::vector<std::vector<Rational>> kernel_from(const Echelon& e, int cols) {
  std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
  for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
    v[static_cast<size_t>(free)] = 1;
    for (size_t r = 0; r < e.rows.size(); ++r) {
      auto it = e.rows[r].find(free);
      if (it != e.rows[r].end())
        v[static_cast<size_t>(e.pivot_cols[r])] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

int RationalMatrix::rank() const {
  return static_cast<int>(reduce(copy_rows(*this), cols_).pivot_cols.size());
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_basis() const {
  return kernel_from(reduce(copy_rows(*this), cols_), cols_);
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix dimension mismatch in product");
  RationalMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (const auto& [k, va] : a.row(r))
      for (const auto& [c, vb] : b.row(k)) out.add(r, c, va * vb);
  return out;
}

std::optional<AffineSolution> solve_affine(const AffineSystem& system) {
  const RationalMatrix& m = system.matrix;
  if (static_cast<int>(system.rhs.size()) != m.rows())
    throw std::invalid_argument("rhs length differs from row count");

  // Augment with the rhs in a virtual extra column, then reduce.
  const int cols = m.cols();
  std::vector<SparseRow> rows = copy_rows(m);
  for (int r = 0; r < m.rows(); ++r)
    if (system.rhs[static_cast<size_t>(r)] != 0)
      rows[static_cast<size_t>(r)][cols] = system.rhs[static_cast<size_t>(r)];

  Echelon e = reduce(std::move(rows), cols + 1);
  // A pivot in the augmented column witnesses 0 = 1.
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(static_cast<size_t>(cols), Rational(0));
  for (size_t r = 0; r < e.rows.size(); ++r) {
    auto it = e.rows[r].find(cols);
    if (it != e.rows[r].end())
      sol.particular[static_cast<size_t>(e.pivot_cols[r])] = it->second;
  }

  // The kernel ignores the augmented column.
  Echelon hom;
  hom.pivot_cols = e.pivot_cols;
  hom.rows = e.rows;
  sol.kernel = kernel_from(hom, cols);
  return sol;
}

}  // namespace assocforge
