#include "assocforge/cohomology.hpp"

#include <stdexcept>
#include <unordered_map>

#include "assocforge/cosimplicial.hpp"

namespace assocforge {

namespace {

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

ChordSeries apply_differential(ComplexKind kind, const ChordSeries& x) {
  return kind == ComplexKind::plain ? differential_d(x) : differential_d_tilde(x);
}

// Rows of the image of the incoming differential at `position`, as vectors
// over the degree-m basis of that position's algebra.
std::vector<std::vector<Rational>> incoming_image_rows(ComplexKind kind,
                                                       int position, int degree) {
  if (position == 0) return {};
  const CochainSlot prev{kind, position - 1, degree};
  const RationalMatrix mat = boundary_matrix(prev);
  // Columns of `mat` are the source basis; its column images span the image.
  std::vector<std::vector<Rational>> rows;
  for (int c = 0; c < mat.cols(); ++c) {
    std::vector<Rational> v(static_cast<size_t>(mat.rows()), Rational(0));
    bool nonzero = false;
    for (int r = 0; r < mat.rows(); ++r) {
      Rational val = mat.get(r, c);
      if (val != 0) nonzero = true;
      v[static_cast<size_t>(r)] = std::move(val);
    }
    if (nonzero) rows.push_back(std::move(v));
  }
  return rows;
}

// Incremental elimination helper over dense vectors: keeps reduced rows with
// recorded pivot columns.
class Eliminator {
 public:
  // Reduces v against the accepted rows; returns true (and keeps the reduced
  // row) when a new pivot appears.
  bool insert(std::vector<Rational> v) {
    reduce(v);
    int pivot = -1;
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) {
        pivot = static_cast<int>(k);
        break;
      }
    if (pivot < 0) return false;
    const Rational inv = 1 / v[static_cast<size_t>(pivot)];
    if (inv != 1)
      for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  void reduce(std::vector<Rational>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rational factor = v[static_cast<size_t>(pivots_[r])];
      if (factor == 0) continue;
      for (size_t k = 0; k < v.size(); ++k) v[k] -= factor * rows_[r][k];
    }
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

int slot_source_strands(const CochainSlot& slot) {
  if (slot.position < 0) throw std::invalid_argument("negative cochain position");
  return slot.complex == ComplexKind::plain ? slot.position : slot.position + 1;
}

RationalMatrix boundary_matrix(const CochainSlot& slot) {
  const int src_strands = slot_source_strands(slot);
  const std::vector<ChordWord> src = basis_words(src_strands, slot.degree);
  const std::vector<ChordWord> dst = basis_words(src_strands + 1, slot.degree);

  std::unordered_map<ChordWord, int, WordHash> dst_index;
  dst_index.reserve(dst.size());
  for (size_t k = 0; k < dst.size(); ++k) dst_index.emplace(dst[k], static_cast<int>(k));

  RationalMatrix out(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (size_t c = 0; c < src.size(); ++c) {
    const ChordSeries e = ChordSeries::monomial(
        ChordMonomial(src_strands, src[c]), slot.degree);
    const ChordSeries image = apply_differential(slot.complex, e);
    for (const auto& [w, coeff] : image.terms()) {
      if (static_cast<int>(w.size()) != slot.degree)
        throw std::logic_error("differential is not degree-preserving");
      out.add(dst_index.at(w), static_cast<int>(c), coeff);
    }
  }
  return out;
}

std::vector<H2Entry> h2_dimensions(ComplexKind complex, int max_chord_degree) {
  if (max_chord_degree < 1) throw std::invalid_argument("degree bound must be >= 1");
  std::vector<H2Entry> out;
  const int strands2 = slot_source_strands({complex, 2, 0});
  for (int m = 1; m <= max_chord_degree; ++m) {
    const CochainSlot slot{complex, 2, m};
    const RationalMatrix d2 = boundary_matrix(slot);
    Eliminator image;
    for (auto& row : incoming_image_rows(complex, 2, m)) image.insert(std::move(row));

    H2Entry entry;
    entry.degree = m;
    const std::vector<ChordWord> basis = basis_words(strands2, m);
    for (auto& kv : d2.kernel_basis()) {
      std::vector<Rational> reduced = kv;
      image.reduce(reduced);
      std::vector<Rational> candidate = reduced;
      if (image.insert(std::move(reduced))) {
        ++entry.dim;
        entry.generators.push_back(series_from_vector(basis, candidate, strands2, m));
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<H01Entry> h01_dimensions(ComplexKind complex, int max_chord_degree) {
  std::vector<H01Entry> out;
  for (int m = 0; m <= max_chord_degree; ++m) {
    H01Entry e;
    e.degree = m;
    const RationalMatrix d0 = boundary_matrix({complex, 0, m});
    const RationalMatrix d1 = boundary_matrix({complex, 1, m});
    e.dim_h0 = d0.cols() - d0.rank();
    e.dim_h1 = d1.cols() - d1.rank() - d0.rank();
    out.push_back(e);
  }
  return out;
}

std::vector<CohomologyRow> cohomology_table(ComplexKind complex, int max_position,
                                            int max_chord_degree) {
  std::vector<CohomologyRow> out;
  for (int p = 0; p <= max_position; ++p)
    for (int m = 0; m <= max_chord_degree; ++m) {
      const RationalMatrix d = boundary_matrix({complex, p, m});
      const int dim_kernel = d.cols() - d.rank();
      int dim_image = 0;
      if (p > 0) dim_image = boundary_matrix({complex, p - 1, m}).rank();
      const int dim_h = dim_kernel - dim_image;
      if (dim_h < 0) throw std::logic_error("negative cohomology dimension; bug");
      out.push_back({complex, p, m, dim_kernel, dim_image, dim_h});
    }
  return out;
}

}  // namespace assocforge
