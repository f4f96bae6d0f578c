#include "assocforge/chord_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <unordered_map>

namespace assocforge {

namespace {

std::atomic<PermutationConvention> g_convention{PermutationConvention::image};

void check_same_shape(const ChordSeries& a, const ChordSeries& b) {
  if (a.strands() != b.strands() || a.max_degree() != b.max_degree())
    throw std::invalid_argument("mixed strand counts or truncation bounds");
}

}  // namespace

void set_permutation_convention(PermutationConvention c) { g_convention = c; }
PermutationConvention permutation_convention() { return g_convention; }

Chord::Chord(int a, int b) {
  if (a == b) throw std::invalid_argument("chord endpoints must differ");
  if (a > b) std::swap(a, b);
  if (a < 1 || b > 255) throw std::invalid_argument("chord index out of range");
  low = static_cast<std::uint8_t>(a);
  high = static_cast<std::uint8_t>(b);
}

ChordMonomial::ChordMonomial(int strands, ChordWord letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 0) throw std::invalid_argument("negative strand count");
  for (const Chord& c : letters_)
    if (c.j() > strands)
      throw std::invalid_argument("chord touches a strand beyond the strand count");
}

bool ChordMonomial::is_normal() const {
  for (size_t p = 1; p < letters_.size(); ++p)
    if (letters_[p - 1].j() > letters_[p].j()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ChordSeries

ChordSeries::ChordSeries(int strands, int max_degree)
    : strands_(strands), max_degree_(max_degree) {
  if (strands < 0 || max_degree < 0)
    throw std::invalid_argument("negative strand count or truncation bound");
}

ChordSeries ChordSeries::zero(int strands, int max_degree) {
  return ChordSeries(strands, max_degree);
}

ChordSeries ChordSeries::one(int strands, int max_degree) {
  ChordSeries s(strands, max_degree);
  s.terms_[ChordWord{}] = 1;
  return s;
}

ChordSeries ChordSeries::generator(int strands, int max_degree, int i, int j) {
  Chord c(i, j);
  if (c.j() > strands) throw std::invalid_argument("generator index beyond strand count");
  ChordSeries s(strands, max_degree);
  if (max_degree >= 1) s.terms_[ChordWord{c}] = 1;
  return s;
}

ChordSeries ChordSeries::monomial(const ChordMonomial& m, int max_degree,
                                  const Rational& coeff) {
  ChordSeries s(m.strands(), max_degree);
  s.add_reduced(m, coeff);
  return s;
}

Rational ChordSeries::coefficient(const ChordWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ChordSeries::constant_term() const { return coefficient(ChordWord{}); }

int ChordSeries::min_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.size());
}

ChordSeries ChordSeries::homogeneous_part(int degree) const {
  ChordSeries out(strands_, max_degree_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == degree) out.terms_[w] = c;
  return out;
}

ChordSeries ChordSeries::truncated(int new_max_degree) const {
  ChordSeries out(strands_, new_max_degree);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) <= new_max_degree) out.terms_[w] = c;
  return out;
}

ChordSeries ChordSeries::operator-() const {
  ChordSeries out(strands_, max_degree_);
  for (const auto& [w, c] : terms_) out.terms_[w] = -c;
  return out;
}

ChordSeries& ChordSeries::operator+=(const ChordSeries& o) {
  check_same_shape(*this, o);
  for (const auto& [w, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

ChordSeries& ChordSeries::operator-=(const ChordSeries& o) {
  check_same_shape(*this, o);
  for (const auto& [w, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(w, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

ChordSeries operator*(const Rational& c, ChordSeries s) {
  if (c == 0) return ChordSeries::zero(s.strands_, s.max_degree_);
  for (auto& [w, v] : s.terms_) v *= c;
  return s;
}

bool ChordSeries::operator==(const ChordSeries& o) const {
  return strands_ == o.strands_ && max_degree_ == o.max_degree_ && terms_ == o.terms_;
}

void ChordSeries::add_normal(const ChordWord& w, const Rational& coeff) {
  if (coeff == 0 || static_cast<int>(w.size()) > max_degree_) return;
  auto [it, fresh] = terms_.try_emplace(w, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

// ---------------------------------------------------------------------------
// Normal-form rewriting

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

// Expands the rewrite of the descent at position p (letters_[p].j > letters_[p+1].j)
// into up to three words with coefficients +-1.
void rewrite_descent(const ChordWord& w, size_t p,
                     std::vector<std::pair<ChordWord, int>>& out) {
  const Chord x = w[p];      // t^{ab}
  const Chord y = w[p + 1];  // t^{cd}, with d < b

  ChordWord swapped = w;
  std::swap(swapped[p], swapped[p + 1]);
  out.emplace_back(std::move(swapped), 1);

  const bool share_low = (x.i() == y.i() || x.i() == y.j());
  // b > d rules out b as a shared index, so chords either share x's low
  // index or are disjoint (and then they commute exactly).
  if (!share_low) return;

  // 4T: [t^{ab}, t^{cd}] = t^{vb} t^{ab} - t^{ab} t^{vb}, where v is the
  // endpoint of t^{cd} away from the shared index a.
  const int v = (x.i() == y.i()) ? y.j() : y.i();
  const Chord other(v, x.j());

  ChordWord plus = w;
  plus[p] = other;
  plus[p + 1] = x;
  out.emplace_back(std::move(plus), 1);

  ChordWord minus = w;
  minus[p] = x;
  minus[p + 1] = other;
  out.emplace_back(std::move(minus), -1);
}

using Expansion = std::map<ChordWord, Rational, WordOrder>;

class NormalFormCache {
 public:
  const Expansion& reduce(const ChordWord& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;

    size_t descent = w.size();
    for (size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p].j() > w[p + 1].j()) {
        descent = p;
        break;
      }

    if (descent == w.size()) {
      Expansion id;
      id.emplace(w, 1);
      return cache_.emplace(w, std::move(id)).first->second;
    }

    std::vector<std::pair<ChordWord, int>> pieces;
    rewrite_descent(w, descent, pieces);
    Expansion total;
    for (auto& [piece, sign] : pieces) {
      const Expansion& sub = reduce(piece);
      for (const auto& [m, c] : sub) {
        auto [it, fresh] = total.try_emplace(m, sign * c);
        if (!fresh) {
          it->second += sign * c;
          if (it->second == 0) total.erase(it);
        }
      }
    }
    return cache_.emplace(w, std::move(total)).first->second;
  }

 private:
  std::unordered_map<ChordWord, Expansion, WordHash> cache_;
};

// The rewriting system does not depend on the ambient strand count, so one
// process-wide cache serves every algebra.
NormalFormCache& nf_cache() {
  thread_local NormalFormCache cache;
  return cache;
}

}  // namespace

void ChordSeries::add_reduced(const ChordMonomial& m, const Rational& coeff) {
  if (coeff == 0 || m.degree() > max_degree_) return;
  if (m.strands() > strands_)
    throw std::invalid_argument("monomial strand count exceeds the series'");
  if (m.is_normal()) {
    add_normal(m.letters(), coeff);
    return;
  }
  for (const auto& [w, c] : nf_cache().reduce(m.letters())) add_normal(w, coeff * c);
}

ChordSeries normal_form(const ChordMonomial& m) {
  return normal_form(m, m.degree());
}

ChordSeries normal_form(const ChordMonomial& m, int max_degree) {
  ChordSeries out(m.strands(), max_degree);
  out.add_reduced(m, 1);
  return out;
}

ChordSeries normal_form_with_strategy(const ChordMonomial& m,
                                      const DescentChooser& choose) {
  ChordSeries out(m.strands(), m.degree());
  // Worklist of unreduced words; every rewrite strictly shrinks the words in
  // a well-founded order, so this terminates for any strategy.
  std::vector<std::pair<ChordWord, Rational>> pending;
  pending.emplace_back(m.letters(), 1);
  while (!pending.empty()) {
    auto [w, coeff] = std::move(pending.back());
    pending.pop_back();

    std::vector<size_t> descents;
    for (size_t p = 0; p + 1 < w.size(); ++p)
      if (w[p].j() > w[p + 1].j()) descents.push_back(p);

    if (descents.empty()) {
      out.add_normal(w, coeff);
      continue;
    }
    const size_t pick = descents[choose(descents.size()) % descents.size()];
    std::vector<std::pair<ChordWord, int>> pieces;
    rewrite_descent(w, pick, pieces);
    for (auto& [piece, sign] : pieces)
      pending.emplace_back(std::move(piece), sign * coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ring operations

ChordSeries multiply(const ChordSeries& a, const ChordSeries& b) {
  check_same_shape(a, b);
  ChordSeries out(a.strands(), a.max_degree());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (static_cast<int>(wa.size() + wb.size()) > a.max_degree()) continue;
      ChordWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      const Rational c = ca * cb;
      const bool junction_ok =
          wa.empty() || wb.empty() || wa.back().j() <= wb.front().j();
      if (junction_ok)
        out.add_normal(w, c);  // both factors normal, so the product is
      else
        out.add_reduced(ChordMonomial(a.strands(), std::move(w)), c);
    }
  }
  return out;
}

ChordSeries exp_series(const ChordSeries& x) {
  if (x.constant_term() != 0)
    throw std::invalid_argument("exp needs a zero constant term");
  ChordSeries result = ChordSeries::one(x.strands(), x.max_degree());
  ChordSeries term = result;  // x^k / k!
  for (int k = 1; k <= x.max_degree(); ++k) {
    term = Rational(1, k) * multiply(term, x);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

ChordSeries log_series(const ChordSeries& y) {
  if (y.constant_term() != 1)
    throw std::invalid_argument("log needs constant term 1");
  ChordSeries u = y - ChordSeries::one(y.strands(), y.max_degree());
  ChordSeries result = ChordSeries::zero(y.strands(), y.max_degree());
  ChordSeries power = ChordSeries::one(y.strands(), y.max_degree());
  for (int k = 1; k <= y.max_degree(); ++k) {
    power = multiply(power, u);
    if (power.is_zero()) break;
    result += Rational(k % 2 == 1 ? 1 : -1, k) * power;
  }
  return result;
}

ChordSeries inverse_series(const ChordSeries& y) {
  const Rational c = y.constant_term();
  if (c == 0) throw std::invalid_argument("inverse needs an invertible constant term");
  const ChordSeries u =
      Rational(1) / c * y - ChordSeries::one(y.strands(), y.max_degree());
  ChordSeries result = ChordSeries::one(y.strands(), y.max_degree());
  ChordSeries power = result;
  for (int k = 1; k <= y.max_degree(); ++k) {
    power = multiply(power, u);
    if (power.is_zero()) break;
    result += Rational(k % 2 == 0 ? 1 : -1) * power;
  }
  return Rational(1) / c * result;
}

namespace detail {

ChordSeries relabel_by_images(const ChordSeries& x, const Permutation& tau) {
  if (tau.size() != x.strands())
    throw std::invalid_argument("permutation size differs from strand count");
  ChordSeries out(x.strands(), x.max_degree());
  for (const auto& [w, c] : x.terms()) {
    ChordWord relabeled;
    relabeled.reserve(w.size());
    for (const Chord& l : w) relabeled.emplace_back(tau(l.i()), tau(l.j()));
    out.add_reduced(ChordMonomial(x.strands(), std::move(relabeled)), c);
  }
  return out;
}

}  // namespace detail

ChordSeries permute(const ChordSeries& x, const Permutation& tau) {
  if (permutation_convention() == PermutationConvention::image)
    return detail::relabel_by_images(x, tau);
  return detail::relabel_by_images(x, tau.inverse());
}

ChordSeries parity(const ChordSeries& x) {
  ChordSeries out(x.strands(), x.max_degree());
  for (const auto& [w, c] : x.terms())
    out.add_normal(w, w.size() % 2 == 0 ? c : -c);
  return out;
}

// ---------------------------------------------------------------------------
// TensorSeries and the coproduct

TensorSeries::TensorSeries(int strands, int max_degree)
    : strands_(strands), max_degree_(max_degree) {}

TensorSeries TensorSeries::zero(int strands, int max_degree) {
  return TensorSeries(strands, max_degree);
}

TensorSeries TensorSeries::product_of(const ChordSeries& a, const ChordSeries& b) {
  check_same_shape(a, b);
  TensorSeries out(a.strands(), a.max_degree());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      if (static_cast<int>(wa.size() + wb.size()) > out.max_degree_) continue;
      out.terms_[Key(wa, wb)] += ca * cb;
    }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

TensorSeries TensorSeries::operator-() const {
  TensorSeries out(strands_, max_degree_);
  for (const auto& [k, c] : terms_) out.terms_[k] = -c;
  return out;
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& o) {
  if (strands_ != o.strands_ || max_degree_ != o.max_degree_)
    throw std::invalid_argument("mixed strand counts or truncation bounds");
  for (const auto& [k, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& o) {
  return *this += -o;
}

TensorSeries operator*(const Rational& c, TensorSeries s) {
  if (c == 0) return TensorSeries::zero(s.strands_, s.max_degree_);
  for (auto& [k, v] : s.terms_) v *= c;
  return s;
}

bool TensorSeries::operator==(const TensorSeries& o) const {
  return strands_ == o.strands_ && max_degree_ == o.max_degree_ && terms_ == o.terms_;
}

void TensorSeries::add_normal(const ChordWord& left, const ChordWord& right,
                              const Rational& coeff) {
  if (coeff == 0 || static_cast<int>(left.size() + right.size()) > max_degree_) return;
  auto [it, fresh] = terms_.try_emplace(Key(left, right), coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void TensorSeries::add_reduced(int strands, const ChordWord& left,
                               const ChordWord& right, const Rational& coeff) {
  if (coeff == 0 || static_cast<int>(left.size() + right.size()) > max_degree_) return;
  ChordSeries l = normal_form(ChordMonomial(strands, left));
  ChordSeries r = normal_form(ChordMonomial(strands, right));
  for (const auto& [wl, cl] : l.terms())
    for (const auto& [wr, cr] : r.terms()) {
      auto [it, fresh] = terms_.try_emplace(Key(wl, wr), coeff * cl * cr);
      if (!fresh) {
        it->second += coeff * cl * cr;
        if (it->second == 0) terms_.erase(it);
      }
    }
}

TensorSeries coproduct(const ChordSeries& x) {
  TensorSeries out(x.strands(), x.max_degree());
  for (const auto& [w, c] : x.terms()) {
    const size_t k = w.size();
    // Each letter is primitive, so the coproduct of a word distributes its
    // letters over the two factors in all 2^k ways, preserving order.
    // Subwords of a normal word stay normal.
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      ChordWord left, right;
      for (size_t p = 0; p < k; ++p)
        (mask >> p & 1 ? left : right).push_back(w[p]);
      out.add_normal(left, right, c);
    }
  }
  return out;
}

TensorSeries multiply(const TensorSeries& a, const TensorSeries& b) {
  if (a.strands() != b.strands() || a.max_degree() != b.max_degree())
    throw std::invalid_argument("mixed strand counts or truncation bounds");
  TensorSeries out(a.strands(), a.max_degree());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (static_cast<int>(ka.first.size() + ka.second.size() + kb.first.size() +
                           kb.second.size()) > a.max_degree())
        continue;
      ChordWord l = ka.first;
      l.insert(l.end(), kb.first.begin(), kb.first.end());
      ChordWord r = ka.second;
      r.insert(r.end(), kb.second.begin(), kb.second.end());
      out.add_reduced(a.strands(), l, r, ca * cb);
    }
  return out;
}

bool is_group_like(const ChordSeries& x) {
  return coproduct(x) == TensorSeries::product_of(x, x);
}

bool is_primitive(const ChordSeries& x) {
  const ChordSeries unit = ChordSeries::one(x.strands(), x.max_degree());
  return coproduct(x) ==
         TensorSeries::product_of(x, unit) + TensorSeries::product_of(unit, x);
}

// ---------------------------------------------------------------------------
// Basis bookkeeping

Integer graded_dimension(int strands, int degree) {
  if (strands < 0 || degree < 0)
    throw std::invalid_argument("negative strand count or degree");
  // dims[d] for the algebra on j strands; adding strand j contributes a free
  // block over j-1 generators, i.e. a factor 1/(1-(j-1)x).
  std::vector<Integer> dims(static_cast<size_t>(degree) + 1, 0);
  dims[0] = 1;
  for (int j = 2; j <= strands; ++j)
    for (int d = 1; d <= degree; ++d) dims[static_cast<size_t>(d)] += (j - 1) * dims[static_cast<size_t>(d) - 1];
  return dims[static_cast<size_t>(degree)];
}

namespace {

void basis_rec(int strands, int remaining, int min_second, ChordWord& acc,
               std::vector<ChordWord>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  // Iterate letters in (i, j) order subject to normality: the next second
  // index may not drop below the previous one.
  for (int i = 1; i < strands; ++i)
    for (int j = std::max(i + 1, min_second); j <= strands; ++j) {
      acc.emplace_back(i, j);
      basis_rec(strands, remaining - 1, j, acc, out);
      acc.pop_back();
    }
}

}  // namespace

std::vector<ChordWord> basis_words(int strands, int degree) {
  std::vector<ChordWord> out;
  ChordWord acc;
  basis_rec(strands, degree, 2, acc, out);
  std::sort(out.begin(), out.end(), [](const ChordWord& a, const ChordWord& b) {
    return WordOrder{}(a, b);
  });
  return out;
}

ChordSeries series_from_vector(const std::vector<ChordWord>& basis,
                               const std::vector<Rational>& coeffs, int strands,
                               int max_degree) {
  if (basis.size() != coeffs.size())
    throw std::invalid_argument("basis/coefficient length mismatch");
  ChordSeries out(strands, max_degree);
  for (size_t k = 0; k < basis.size(); ++k) out.add_normal(basis[k], coeffs[k]);
  return out;
}

std::string word_text(const ChordWord& w) {
  if (w.empty()) return "-";
  std::string out;
  for (size_t p = 0; p < w.size(); ++p) {
    if (w[p].j() > 9)
      throw std::invalid_argument("text rendering supports at most 9 strands");
    if (p) out += '.';
    out += static_cast<char>('0' + w[p].i());
    out += static_cast<char>('0' + w[p].j());
  }
  return out;
}

ChordWord parse_word_text(const std::string& text) {
  ChordWord w;
  if (text == "-") return w;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t dot = text.find('.', pos);
    const std::string tok = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
    if (tok.size() != 2 || !isdigit(static_cast<unsigned char>(tok[0])) ||
        !isdigit(static_cast<unsigned char>(tok[1])))
      throw std::invalid_argument("malformed chord pair in monomial text: " + text);
    w.emplace_back(tok[0] - '0', tok[1] - '0');
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  if (w.empty()) throw std::invalid_argument("empty monomial text: " + text);
  return w;
}

}  // namespace assocforge
