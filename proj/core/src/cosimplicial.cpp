#include "assocforge/cosimplicial.hpp"

#include <stdexcept>

namespace assocforge {

namespace {

// Images of one generator t^{jk} (j < k) under d_i, per the five-case table.
void face_image(int i, const Chord& c, ChordWord& out) {
  const int j = c.i(), k = c.j();
  if (i < j) {
    out.emplace_back(j + 1, k + 1);
  } else if (i == j) {
    out.emplace_back(j, k + 1);
    out.emplace_back(j + 1, k + 1);
  } else if (i < k) {
    out.emplace_back(j, k + 1);
  } else if (i == k) {
    out.emplace_back(j, k);
    out.emplace_back(j, k + 1);
  } else {
    out.emplace_back(j, k);
  }
}

}  // namespace

ChordSeries apply_d(int i, const ChordSeries& x) {
  const int n = x.strands();
  if (i < 0 || i > n + 1) throw std::out_of_range("face index out of range");
  ChordSeries out(n + 1, x.max_degree());
  for (const auto& [w, coeff] : x.terms()) {
    // Expand the product of per-letter images (each one or two chords),
    // then reduce each expanded word once.
    std::vector<ChordWord> images(w.size());
    for (size_t p = 0; p < w.size(); ++p) face_image(i, w[p], images[p]);
    ChordWord word(w.size(), Chord(1, 2));
    size_t total = 1;
    for (const auto& im : images) total *= im.size();
    for (size_t pick = 0; pick < total; ++pick) {
      size_t rest = pick;
      for (size_t p = 0; p < w.size(); ++p) {
        word[p] = images[p][rest % images[p].size()];
        rest /= images[p].size();
      }
      out.add_reduced(ChordMonomial(n + 1, word), coeff);
    }
  }
  return out;
}

ChordSeries apply_s(int i, const ChordSeries& x) {
  const int n = x.strands();
  if (i < 1 || i > n) throw std::out_of_range("degeneracy index out of range");
  ChordSeries out(n - 1, x.max_degree());
  for (const auto& [w, coeff] : x.terms()) {
    ChordWord image;
    image.reserve(w.size());
    bool killed = false;
    for (const Chord& c : w) {
      const int j = c.i(), k = c.j();
      if (i == j || i == k) {
        killed = true;  // chord touches the removed strand
        break;
      }
      image.emplace_back(j > i ? j - 1 : j, k > i ? k - 1 : k);
    }
    if (!killed) out.add_reduced(ChordMonomial(n - 1, std::move(image)), coeff);
  }
  return out;
}

ChordSeries apply_d_tilde(int i, const ChordSeries& x) {
  const int n = x.strands() - 1;
  if (n < 0) throw std::invalid_argument("shifted face needs at least one strand");
  if (i < 0 || i > n + 1) throw std::out_of_range("face index out of range");
  if (i <= n) return apply_d(i, x);
  // Insert the empty strand between strands n and n+1: extend on the right,
  // then swap the last two strands.
  ChordSeries extended = apply_d(n + 2, x);
  return detail::relabel_by_images(
      extended, Permutation::transposition(n + 2, n + 1, n + 2));
}

ChordSeries apply_s_tilde(int i, const ChordSeries& x) { return apply_s(i, x); }

ChordSeries differential_d(const ChordSeries& x) {
  const int n = x.strands();
  ChordSeries out(n + 1, x.max_degree());
  for (int i = 0; i <= n + 1; ++i) {
    if (i % 2 == 0)
      out += apply_d(i, x);
    else
      out -= apply_d(i, x);
  }
  return out;
}

ChordSeries differential_d_tilde(const ChordSeries& x) {
  const int n = x.strands() - 1;
  ChordSeries out(n + 2, x.max_degree());
  for (int i = 0; i <= n + 1; ++i) {
    if (i % 2 == 0)
      out += apply_d_tilde(i, x);
    else
      out -= apply_d_tilde(i, x);
  }
  return out;
}

}  // namespace assocforge
