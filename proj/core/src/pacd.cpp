#include "assocforge/pacd.hpp"

#include <sstream>
#include <stdexcept>

namespace assocforge {

// ---------------------------------------------------------------------------
// ParenTree

struct ParenTree::Node {
  NodePtr left;
  NodePtr right;
  int leaves;
};

ParenTree ParenTree::leaf() {
  return ParenTree(std::make_shared<const Node>(Node{nullptr, nullptr, 1}));
}

ParenTree ParenTree::pair(const ParenTree& left, const ParenTree& right) {
  if (!left.root_ || !right.root_)
    throw std::invalid_argument("pairing an empty parenthesization");
  return ParenTree(std::make_shared<const Node>(
      Node{left.root_, right.root_, left.leaves() + right.leaves()}));
}

ParenTree ParenTree::right_comb(int n) {
  if (n < 0) throw std::invalid_argument("negative point count");
  if (n == 0) return ParenTree();
  ParenTree t = leaf();
  for (int k = 1; k < n; ++k) t = pair(leaf(), t);
  return t;
}

int ParenTree::leaves() const { return root_ ? root_->leaves : 0; }
bool ParenTree::is_leaf() const { return root_ && root_->leaves == 1; }

ParenTree ParenTree::left() const {
  if (!root_ || !root_->left) throw std::logic_error("no left subtree");
  return ParenTree(root_->left);
}

ParenTree ParenTree::right() const {
  if (!root_ || !root_->right) throw std::logic_error("no right subtree");
  return ParenTree(root_->right);
}

ParenTree ParenTree::double_leaf(int i) const {
  if (i < 1 || i > leaves()) throw std::out_of_range("leaf index out of range");
  if (is_leaf()) return pair(leaf(), leaf());
  const ParenTree l = left(), r = right();
  if (i <= l.leaves()) return pair(l.double_leaf(i), r);
  return pair(l, r.double_leaf(i - l.leaves()));
}

ParenTree ParenTree::extend_left() const {
  return root_ ? pair(leaf(), *this) : leaf();
}

ParenTree ParenTree::extend_right() const {
  return root_ ? pair(*this, leaf()) : leaf();
}

ParenTree ParenTree::remove_leaf(int i) const {
  if (i < 1 || i > leaves()) throw std::out_of_range("leaf index out of range");
  if (is_leaf()) return ParenTree();
  const ParenTree l = left(), r = right();
  if (i <= l.leaves()) {
    if (l.is_leaf()) return r;
    return pair(l.remove_leaf(i), r);
  }
  if (r.is_leaf()) return l;
  return pair(l, r.remove_leaf(i - l.leaves()));
}

std::string ParenTree::to_string() const {
  if (!root_) return "()";
  if (is_leaf()) return ".";
  return "(" + left().to_string() + right().to_string() + ")";
}

bool ParenTree::operator==(const ParenTree& o) const {
  const auto eq = [](const auto& self, const NodePtr& a, const NodePtr& b) -> bool {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->leaves != b->leaves) return false;
    if (!a->left) return !b->left;
    if (!b->left) return false;
    return self(self, a->left, b->left) && self(self, a->right, b->right);
  };
  return eq(eq, root_, o.root_);
}

// ---------------------------------------------------------------------------
// PaPMorphism

PaPMorphism::PaPMorphism(ParenTree dom, ParenTree rng, Permutation p)
    : domain(std::move(dom)), range(std::move(rng)), perm(std::move(p)) {
  if (domain.leaves() != perm.size() || range.leaves() != perm.size())
    throw std::invalid_argument("skeleton sizes do not match the permutation");
}

PaPMorphism PaPMorphism::identity(const ParenTree& object) {
  return PaPMorphism(object, object, Permutation::identity(object.leaves()));
}

PaPMorphism compose(const PaPMorphism& f, const PaPMorphism& g) {
  if (!(f.range == g.domain))
    throw std::invalid_argument("skeletons are not composable");
  return PaPMorphism(f.domain, g.range, compose(g.perm, f.perm));
}

PaPMorphism inverse(const PaPMorphism& f) {
  return PaPMorphism(f.range, f.domain, f.perm.inverse());
}

PaPMorphism apply_d(int i, const PaPMorphism& f) {
  const int n = f.strands();
  if (i < 0 || i > n + 1) throw std::out_of_range("face index out of range");
  if (i == 0) {
    std::vector<int> im(static_cast<size_t>(n) + 1);
    im[0] = 1;
    for (int p = 1; p <= n; ++p) im[static_cast<size_t>(p)] = f.perm(p) + 1;
    return PaPMorphism(f.domain.extend_left(), f.range.extend_left(),
                       Permutation(std::move(im)));
  }
  if (i == n + 1) {
    std::vector<int> im(static_cast<size_t>(n) + 1);
    for (int p = 1; p <= n; ++p) im[static_cast<size_t>(p) - 1] = f.perm(p);
    im[static_cast<size_t>(n)] = n + 1;
    return PaPMorphism(f.domain.extend_right(), f.range.extend_right(),
                       Permutation(std::move(im)));
  }
  // double strand i; its daughters stay parallel
  const int q = f.perm(i);
  std::vector<int> im(static_cast<size_t>(n) + 1);
  const auto adjust = [q](int r) { return r > q ? r + 1 : r; };
  for (int p = 1; p < i; ++p) im[static_cast<size_t>(p) - 1] = adjust(f.perm(p));
  im[static_cast<size_t>(i) - 1] = q;
  im[static_cast<size_t>(i)] = q + 1;
  for (int p = i + 1; p <= n; ++p) im[static_cast<size_t>(p)] = adjust(f.perm(p));
  return PaPMorphism(f.domain.double_leaf(i), f.range.double_leaf(q),
                     Permutation(std::move(im)));
}

PaPMorphism apply_s(int i, const PaPMorphism& f) {
  const int n = f.strands();
  if (i < 1 || i > n) throw std::out_of_range("strand index out of range");
  const int q = f.perm(i);
  std::vector<int> im(static_cast<size_t>(n) - 1);
  for (int p = 1; p <= n; ++p) {
    if (p == i) continue;
    const int pp = p > i ? p - 1 : p;
    const int r = f.perm(p);
    im[static_cast<size_t>(pp) - 1] = r > q ? r - 1 : r;
  }
  return PaPMorphism(f.domain.remove_leaf(i), f.range.remove_leaf(q),
                     Permutation(std::move(im)));
}

// ---------------------------------------------------------------------------
// PaCDMorphism

PaCDMorphism::PaCDMorphism(PaPMorphism skel, ChordSeries s)
    : skeleton(std::move(skel)), series(std::move(s)) {
  if (series.strands() != skeleton.strands())
    throw std::invalid_argument("series strand count differs from the skeleton");
}

PaCDMorphism PaCDMorphism::identity(const ParenTree& object, int max_degree) {
  return PaCDMorphism(PaPMorphism::identity(object),
                      ChordSeries::one(object.leaves(), max_degree));
}

PaCDMorphism compose(const PaCDMorphism& f, const PaCDMorphism& g) {
  if (f.max_degree() != g.max_degree())
    throw std::invalid_argument("mixed truncation bounds in composition");
  // Sliding g's chords down through f's crossings relabels them by the
  // inverse of f's (bottom -> top) permutation.
  const ChordSeries pulled =
      detail::relabel_by_images(g.series, f.skeleton.perm.inverse());
  return PaCDMorphism(compose(f.skeleton, g.skeleton), multiply(f.series, pulled));
}

PaCDMorphism inverse(const PaCDMorphism& f) {
  const ChordSeries inv = detail::relabel_by_images(inverse_series(f.series),
                                                    f.skeleton.perm);
  return PaCDMorphism(inverse(f.skeleton), inv);
}

PaCDMorphism apply_d_morphism(int i, const PaCDMorphism& f) {
  return PaCDMorphism(apply_d(i, f.skeleton), apply_d(i, f.series));
}

PaCDMorphism apply_s_morphism(int i, const PaCDMorphism& f) {
  return PaCDMorphism(apply_s(i, f.skeleton), apply_s(i, f.series));
}

// ---------------------------------------------------------------------------
// Generators

PaCDMorphism assoc_generator(int max_degree) {
  const ParenTree l = ParenTree::leaf();
  const ParenTree dom = ParenTree::pair(ParenTree::pair(l, l), l);
  const ParenTree rng = ParenTree::pair(l, ParenTree::pair(l, l));
  return PaCDMorphism(PaPMorphism(dom, rng, Permutation::identity(3)),
                      ChordSeries::one(3, max_degree));
}

PaCDMorphism swap_generator(int max_degree) {
  const ParenTree obj = ParenTree::pair(ParenTree::leaf(), ParenTree::leaf());
  return PaCDMorphism(PaPMorphism(obj, obj, Permutation({2, 1})),
                      ChordSeries::one(2, max_degree));
}

PaCDMorphism chord_generator(int max_degree) {
  const ParenTree obj = ParenTree::pair(ParenTree::leaf(), ParenTree::leaf());
  return PaCDMorphism(PaPMorphism::identity(obj),
                      ChordSeries::generator(2, max_degree, 1, 2));
}

PaCDMorphism crossing_generator(int max_degree) {
  const ParenTree obj = ParenTree::pair(ParenTree::leaf(), ParenTree::leaf());
  const ChordSeries half =
      Rational(1, 2) * ChordSeries::generator(2, max_degree, 1, 2);
  return PaCDMorphism(PaPMorphism(obj, obj, Permutation({2, 1})),
                      exp_series(half));
}

PaCDMorphism pacd_generator(const std::string& name, int max_degree) {
  if (name == "a") return assoc_generator(max_degree);
  if (name == "a^-1") return inverse(assoc_generator(max_degree));
  if (name == "X") return swap_generator(max_degree);
  if (name == "H") return chord_generator(max_degree);
  if (name == "R") return crossing_generator(max_degree);
  throw std::invalid_argument("unknown generator name: " + name);
}

// ---------------------------------------------------------------------------
// Braid words

PaBToken inverse(const PaBToken& t) {
  PaBToken out = t;
  switch (t.base) {
    case PaBToken::Base::assoc: out.base = PaBToken::Base::assoc_inv; break;
    case PaBToken::Base::assoc_inv: out.base = PaBToken::Base::assoc; break;
    case PaBToken::Base::sigma: out.base = PaBToken::Base::sigma_inv; break;
    case PaBToken::Base::sigma_inv: out.base = PaBToken::Base::sigma; break;
  }
  return out;
}

PaBWord inverse(const PaBWord& w) {
  PaBWord out;
  out.strands = w.strands;
  for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it)
    out.tokens.push_back(inverse(*it));
  return out;
}

PaBWord concat(const PaBWord& a, const PaBWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("concatenating words on different strand counts");
  PaBWord out = a;
  out.tokens.insert(out.tokens.end(), b.tokens.begin(), b.tokens.end());
  return out;
}

namespace {

PaPMorphism base_skeleton(PaBToken::Base base) {
  switch (base) {
    case PaBToken::Base::assoc: return assoc_generator(0).skeleton;
    case PaBToken::Base::assoc_inv: return inverse(assoc_generator(0).skeleton);
    case PaBToken::Base::sigma:
    case PaBToken::Base::sigma_inv: return swap_generator(0).skeleton;
  }
  throw std::logic_error("unreachable");
}

int base_strands(PaBToken::Base base) {
  return (base == PaBToken::Base::assoc || base == PaBToken::Base::assoc_inv) ? 3 : 2;
}

}  // namespace

PaPMorphism token_skeleton(const PaBToken& t) {
  PaPMorphism skel = base_skeleton(t.base);
  int strands = base_strands(t.base);
  for (const auto& face : t.faces) {
    if (face.source_strands != strands)
      throw std::invalid_argument("face op strand count mismatch in token");
    skel = apply_d(face.index, skel);
    ++strands;
  }
  return skel;
}

PaPMorphism word_skeleton(const PaBWord& w) {
  PaPMorphism acc = PaPMorphism::identity(ParenTree::right_comb(w.strands));
  for (const auto& t : w.tokens) acc = compose(acc, token_skeleton(t));
  return acc;
}

PaBWord compile_braid_generator(int i, int n, bool positive) {
  if (n < 2) throw std::invalid_argument("braid generators need at least 2 strands");
  if (i < 1 || i > n - 1) throw std::out_of_range("braid generator index out of range");

  const auto sigma_base = positive ? PaBToken::Base::sigma : PaBToken::Base::sigma_inv;
  PaBWord out;
  out.strands = n;

  if (i == n - 1) {
    // the pair is already the innermost product of the right comb
    PaBToken cross{sigma_base, {}};
    for (int k = 2; k < n; ++k) cross.faces.push_back({0, k});
    out.tokens.push_back(cross);
    return out;
  }

  // Rotate node(i, node(i+1, rest)) into node(node(i, i+1), rest): one
  // reassociation whose third slot carries the right comb on the remaining
  // n-i-1 strands, built by doubling the last strand.
  const auto grown_faces = [&](int base) {
    std::vector<PaBToken::FaceOp> faces;
    for (int k = base; k <= n - i; ++k) faces.push_back({k, k});  // double last
    for (int k = n - i + 1; k <= n - 1; ++k) faces.push_back({0, k});  // extend left
    return faces;
  };

  PaBToken rot{PaBToken::Base::assoc_inv, grown_faces(3)};
  PaBToken unrot{PaBToken::Base::assoc, grown_faces(3)};

  PaBToken cross{sigma_base, {}};
  cross.faces.push_back({3, 2});  // sigma extended by an outermost point
  for (const auto& f : grown_faces(3)) cross.faces.push_back(f);

  out.tokens.push_back(rot);
  out.tokens.push_back(cross);
  out.tokens.push_back(unrot);
  return out;
}

PaBWord pure_braid_generator(int i, int j, int n) {
  if (i < 1 || j <= i || j > n)
    throw std::invalid_argument("pure braid generator needs 1 <= i < j <= n");
  PaBWord conjugator;
  conjugator.strands = n;
  for (int k = j - 1; k > i; --k)
    conjugator = concat(conjugator, compile_braid_generator(k, n));
  PaBWord core = concat(compile_braid_generator(i, n), compile_braid_generator(i, n));
  return concat(concat(conjugator, core), inverse(conjugator));
}

PaBWord parse_braid_word(const std::string& text, int n) {
  PaBWord out;
  out.strands = n;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool positive = true;
    std::string head = tok;
    if (const auto caret = tok.find('^'); caret != std::string::npos) {
      const std::string power = tok.substr(caret + 1);
      if (power != "-1")
        throw std::invalid_argument("unsupported braid token power: " + tok);
      positive = false;
      head = tok.substr(0, caret);
    }
    if (head.size() < 2 || head[0] != 's')
      throw std::invalid_argument("malformed braid token: " + tok);
    int index = 0;
    try {
      index = std::stoi(head.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed braid token: " + tok);
    }
    out = concat(out, compile_braid_generator(index, n, positive));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The universal invariant

namespace {

PaCDMorphism token_image(const PaBToken& t, const ChordSeries& phi) {
  const int M = phi.max_degree();
  PaCDMorphism img = [&]() {
    switch (t.base) {
      case PaBToken::Base::assoc:
        return PaCDMorphism(assoc_generator(M).skeleton, phi);
      case PaBToken::Base::assoc_inv:
        return inverse(PaCDMorphism(assoc_generator(M).skeleton, phi));
      case PaBToken::Base::sigma:
        return crossing_generator(M);
      case PaBToken::Base::sigma_inv:
        return inverse(crossing_generator(M));
    }
    throw std::logic_error("unreachable");
  }();
  for (const auto& face : t.faces) {
    if (face.source_strands != img.strands())
      throw std::invalid_argument("face op strand count mismatch in token");
    img = apply_d_morphism(face.index, img);
  }
  return img;
}

}  // namespace

PaCDMorphism evaluate_Z(const PaBWord& word, const AssociatorCandidate& phi) {
  const EquationReport check = is_associator(phi);
  if (!check.ok)
    throw std::invalid_argument(
        "refusing to evaluate the invariant with a non-associator");
  PaCDMorphism acc =
      PaCDMorphism::identity(ParenTree::right_comb(word.strands), phi.max_degree());
  for (const auto& t : word.tokens) acc = compose(acc, token_image(t, phi.phi));
  return acc;
}

BraidRelationReport check_braid_relations(int n, const AssociatorCandidate& phi) {
  BraidRelationReport report;
  auto record = [&](std::string name, bool ok) {
    report.checks.push_back({std::move(name), ok});
    report.ok = report.ok && ok;
  };

  for (int i = 1; i + 1 <= n - 1; ++i) {
    const PaBWord lhs = concat(
        concat(compile_braid_generator(i, n), compile_braid_generator(i + 1, n)),
        compile_braid_generator(i, n));
    const PaBWord rhs = concat(
        concat(compile_braid_generator(i + 1, n), compile_braid_generator(i, n)),
        compile_braid_generator(i + 1, n));
    record("yang-baxter s" + std::to_string(i) + " s" + std::to_string(i + 1),
           evaluate_Z(lhs, phi) == evaluate_Z(rhs, phi));
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      const PaBWord lhs =
          concat(compile_braid_generator(i, n), compile_braid_generator(j, n));
      const PaBWord rhs =
          concat(compile_braid_generator(j, n), compile_braid_generator(i, n));
      record("commute s" + std::to_string(i) + " s" + std::to_string(j),
             evaluate_Z(lhs, phi) == evaluate_Z(rhs, phi));
    }
  return report;
}

}  // namespace assocforge
