#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "assocforge/permutation.hpp"
#include "assocforge/rational.hpp"

namespace assocforge {

// Reading of the symmetric-group action on strands. Under `image` a chord
// generator relabels as t^{ij} -> t^{tau(i) tau(j)}; under `preimage` the
// inverse relabeling is used. The test suite pins `image` as the reading
// consistent with the cabling identity and the categorical composition law;
// `preimage` is selectable through ASSOCFORGE_PERM_CONVENTION.
enum class PermutationConvention { image, preimage };

void set_permutation_convention(PermutationConvention c);
PermutationConvention permutation_convention();

/// One chord t^{ij}. Construction normalizes to i < j (t^{ij} = t^{ji}).
struct Chord {
  std::uint8_t low;   // i, 1-based
  std::uint8_t high;  // j, with low < high

  Chord(int a, int b);
  int i() const { return low; }
  int j() const { return high; }
  auto operator<=>(const Chord&) const = default;
};

using ChordWord = std::vector<Chord>;

/// A word in the chord generators on a fixed number of strands. The word is
/// in normal form when the sequence of second (larger) strand indices is
/// nondecreasing left to right; letters sharing a second index stay in input
/// order.
class ChordMonomial {
 public:
  ChordMonomial(int strands, ChordWord letters);
  static ChordMonomial unit(int strands) { return ChordMonomial(strands, {}); }

  int strands() const { return strands_; }
  int degree() const { return static_cast<int>(letters_.size()); }
  const ChordWord& letters() const { return letters_; }
  bool is_normal() const;

  bool operator==(const ChordMonomial& o) const { return letters_ == o.letters_; }

 private:
  int strands_;
  ChordWord letters_;
};

/// Degree-first, then letterwise-lexicographic order on words. For strand
/// indices below 10 this coincides with string order on the dotted text
/// rendering, which is what the file format sorts by.
struct WordOrder {
  bool operator()(const ChordWord& a, const ChordWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of the truncated chord-diagram algebra on `strands` strands: a
/// sparse rational combination of normal-form monomials of degree at most
/// `max_degree`. Immutable value type; all operations are pure.
class ChordSeries {
 public:
  using TermMap = std::map<ChordWord, Rational, WordOrder>;

  ChordSeries(int strands, int max_degree);

  static ChordSeries zero(int strands, int max_degree);
  static ChordSeries one(int strands, int max_degree);
  static ChordSeries generator(int strands, int max_degree, int i, int j);
  static ChordSeries monomial(const ChordMonomial& m, int max_degree,
                              const Rational& coeff = 1);

  int strands() const { return strands_; }
  int max_degree() const { return max_degree_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ChordWord& w) const;
  Rational constant_term() const;
  /// Least degree with a nonzero term; -1 for the zero series.
  int min_degree() const;
  ChordSeries homogeneous_part(int degree) const;
  /// Same element re-truncated; raising the bound never invents terms,
  /// lowering it drops the tail.
  ChordSeries truncated(int new_max_degree) const;

  ChordSeries operator-() const;
  ChordSeries& operator+=(const ChordSeries& o);
  ChordSeries& operator-=(const ChordSeries& o);
  friend ChordSeries operator+(ChordSeries a, const ChordSeries& b) { return a += b; }
  friend ChordSeries operator-(ChordSeries a, const ChordSeries& b) { return a -= b; }
  friend ChordSeries operator*(const Rational& c, ChordSeries s);
  friend ChordSeries operator*(ChordSeries s, const Rational& c) { return c * std::move(s); }

  bool operator==(const ChordSeries& o) const;

  /// Adds coeff * (normal form of m); the workhorse used by every operation
  /// that can produce non-normal words.
  void add_reduced(const ChordMonomial& m, const Rational& coeff);
  /// Adds a term known to be normal already.
  void add_normal(const ChordWord& w, const Rational& coeff);

 private:
  int strands_;
  int max_degree_;
  TermMap terms_;
};

/// Element of the two-fold tensor product, truncated by total degree.
class TensorSeries {
 public:
  using Key = std::pair<ChordWord, ChordWord>;
  struct KeyOrder {
    bool operator()(const Key& a, const Key& b) const {
      WordOrder w;
      if (w(a.first, b.first)) return true;
      if (w(b.first, a.first)) return false;
      return w(a.second, b.second);
    }
  };
  using TermMap = std::map<Key, Rational, KeyOrder>;

  TensorSeries(int strands, int max_degree);

  static TensorSeries zero(int strands, int max_degree);
  /// a (x) b, truncated at total degree.
  static TensorSeries product_of(const ChordSeries& a, const ChordSeries& b);

  int strands() const { return strands_; }
  int max_degree() const { return max_degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorSeries operator-() const;
  TensorSeries& operator+=(const TensorSeries& o);
  TensorSeries& operator-=(const TensorSeries& o);
  friend TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
  friend TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }
  friend TensorSeries operator*(const Rational& c, TensorSeries s);

  bool operator==(const TensorSeries& o) const;

  void add_reduced(int strands, const ChordWord& left, const ChordWord& right,
                   const Rational& coeff);
  /// Adds a term whose components are already normal.
  void add_normal(const ChordWord& left, const ChordWord& right,
                  const Rational& coeff);

 private:
  int strands_;
  int max_degree_;
  TermMap terms_;
};

/// Unique expansion of a word in the normal-form basis, obtained by swapping
/// adjacent letters whose second indices decrease:
///   t^{ab} t^{cd} -> t^{cd} t^{ab} + [t^{ab}, t^{cd}],
/// with the commutator zero for disjoint chords and, via the 4T relation, a
/// difference of two words when an index is shared. Results are memoized.
ChordSeries normal_form(const ChordMonomial& m);
ChordSeries normal_form(const ChordMonomial& m, int max_degree);

/// Picks which of `count` out-of-order adjacent pairs to rewrite next.
using DescentChooser = std::function<std::size_t(std::size_t count)>;

/// Uncached reduction driven by an arbitrary strategy; the confluence tests
/// feed random choices through this and compare against normal_form.
ChordSeries normal_form_with_strategy(const ChordMonomial& m,
                                      const DescentChooser& choose);

ChordSeries multiply(const ChordSeries& a, const ChordSeries& b);
inline ChordSeries operator*(const ChordSeries& a, const ChordSeries& b) {
  return multiply(a, b);
}

/// exp of a series with zero constant term.
ChordSeries exp_series(const ChordSeries& x);
/// log of a series with constant term 1.
ChordSeries log_series(const ChordSeries& y);
/// Multiplicative inverse; requires a nonzero constant term.
ChordSeries inverse_series(const ChordSeries& y);

/// The strand-permutation automorphism, honoring the active convention.
ChordSeries permute(const ChordSeries& x, const Permutation& tau);

/// The parity automorphism: scales the degree-m part by (-1)^m.
ChordSeries parity(const ChordSeries& x);

/// Multiplicative extension of t^{ij} -> t^{ij} (x) 1 + 1 (x) t^{ij}.
TensorSeries coproduct(const ChordSeries& x);

TensorSeries multiply(const TensorSeries& a, const TensorSeries& b);

bool is_group_like(const ChordSeries& x);
bool is_primitive(const ChordSeries& x);

/// Number of normal-form monomials of degree m on n strands; equals the
/// x^m coefficient of prod_{k=1}^{n-1} 1/(1-kx).
Integer graded_dimension(int strands, int degree);

/// The normal-form monomials of one degree, listed in WordOrder.
std::vector<ChordWord> basis_words(int strands, int degree);

/// Homogeneous series from coefficients over a basis listing.
ChordSeries series_from_vector(const std::vector<ChordWord>& basis,
                               const std::vector<Rational>& coeffs, int strands,
                               int max_degree);

/// Canonical text rendering: dot-separated index pairs ("12.23.13"), "-" for
/// the empty word. Requires all strand indices below 10.
std::string word_text(const ChordWord& w);
ChordWord parse_word_text(const std::string& text);

namespace detail {
/// Raw strand relabeling by images, independent of the active convention.
/// The categorical composition law is expressed through this.
ChordSeries relabel_by_images(const ChordSeries& x, const Permutation& tau);
}  // namespace detail

}  // namespace assocforge
