#pragma once

#include <memory>
#include <string>
#include <vector>

#include "assocforge/equations.hpp"
#include "assocforge/permutation.hpp"

namespace assocforge {

/// A parenthesization of an ordered sequence of points: a full binary tree.
/// Value type with cheap copies; equality is structural.
class ParenTree {
 public:
  ParenTree() : root_(nullptr) {}  // zero points
  static ParenTree leaf();
  static ParenTree pair(const ParenTree& left, const ParenTree& right);
  /// (.(.(...(..)...))), the base object braid generators are compiled on.
  static ParenTree right_comb(int n);

  int leaves() const;
  bool is_leaf() const;
  ParenTree left() const;
  ParenTree right() const;

  /// Replaces the i-th leaf (1-based) by an innermost pair.
  ParenTree double_leaf(int i) const;
  /// Adds an outermost point on the left / right.
  ParenTree extend_left() const;
  ParenTree extend_right() const;
  /// Removes the i-th leaf; the sibling subtree replaces the parent.
  ParenTree remove_leaf(int i) const;

  std::string to_string() const;  // e.g. "((..)(.(..)))"

  bool operator==(const ParenTree& o) const;

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  explicit ParenTree(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;
};

/// A parenthesized permutation: the skeleton of both parenthesized braids
/// and parenthesized chord diagrams. The permutation maps domain (bottom)
/// positions to range (top) positions.
struct PaPMorphism {
  ParenTree domain;
  ParenTree range;
  Permutation perm;

  PaPMorphism(ParenTree dom, ParenTree rng, Permutation p);
  static PaPMorphism identity(const ParenTree& object);

  int strands() const { return perm.size(); }
  bool operator==(const PaPMorphism&) const = default;
};

PaPMorphism compose(const PaPMorphism& f, const PaPMorphism& g);
PaPMorphism inverse(const PaPMorphism& f);
PaPMorphism apply_d(int i, const PaPMorphism& f);
PaPMorphism apply_s(int i, const PaPMorphism& f);

/// A formal product (chord series) . (parenthesized permutation), with the
/// twisted composition law: composing f below g multiplies f's series by
/// g's series pulled down through f's permutation.
struct PaCDMorphism {
  PaPMorphism skeleton;
  ChordSeries series;

  PaCDMorphism(PaPMorphism skel, ChordSeries s);
  static PaCDMorphism identity(const ParenTree& object, int max_degree);

  int strands() const { return skeleton.strands(); }
  int max_degree() const { return series.max_degree(); }
  bool operator==(const PaCDMorphism&) const = default;
};

PaCDMorphism compose(const PaCDMorphism& f, const PaCDMorphism& g);
PaCDMorphism inverse(const PaCDMorphism& f);
PaCDMorphism apply_d_morphism(int i, const PaCDMorphism& f);
PaCDMorphism apply_s_morphism(int i, const PaCDMorphism& f);

/// The generators: a (reparenthesization), X (transposition), H (one
/// chord), and the crossing image R = exp(H/2) . X.
PaCDMorphism assoc_generator(int max_degree);       // ((..).) -> (.(..))
PaCDMorphism swap_generator(int max_degree);        // X
PaCDMorphism chord_generator(int max_degree);       // H
PaCDMorphism crossing_generator(int max_degree);    // R
PaCDMorphism pacd_generator(const std::string& name, int max_degree);

/// One syntactic generator of the braid category: a base tag, wrapped by a
/// sequence of face operations recorded with their source strand counts.
struct PaBToken {
  enum class Base { assoc, assoc_inv, sigma, sigma_inv };
  struct FaceOp {
    int index;
    int source_strands;
  };
  Base base;
  std::vector<FaceOp> faces;
};

struct PaBWord {
  int strands = 0;  // ambient strand count of every token
  std::vector<PaBToken> tokens;
};

PaBToken inverse(const PaBToken& t);
PaBWord inverse(const PaBWord& w);
PaBWord concat(const PaBWord& a, const PaBWord& b);

/// The skeleton of one token / of a whole word.
PaPMorphism token_skeleton(const PaBToken& t);
PaPMorphism word_skeleton(const PaBWord& w);

/// Compiles the braid generator sigma_i on n strands (from the right-combed
/// base object back to itself): a deterministic reassociation prefix, a
/// face image of sigma on the now-innermost pair, and the inverse suffix.
PaBWord compile_braid_generator(int i, int n, bool positive = true);

/// The standard pure-braid generator wrapping strands i < j around each
/// other, as a word in the compiled sigma_i.
PaBWord pure_braid_generator(int i, int j, int n);

/// Whitespace-separated tokens "s1", "s2^-1", ... on n strands.
PaBWord parse_braid_word(const std::string& text, int n);

/// The universal invariant: token-wise images a -> phi . a, sigma -> R,
/// with the face operations commuting with the assignment. Refuses a phi
/// that fails the associator axioms, since the result would not be a braid
/// invariant.
PaCDMorphism evaluate_Z(const PaBWord& word, const AssociatorCandidate& phi);

struct BraidRelationCheck {
  std::string relation;
  bool ok;
};

struct BraidRelationReport {
  bool ok = true;
  std::vector<BraidRelationCheck> checks;
};

/// Verifies the Yang-Baxter and far-commutation relations of the braid
/// group on n strands under Z, to the candidate's truncation.
BraidRelationReport check_braid_relations(int n, const AssociatorCandidate& phi);

}  // namespace assocforge
