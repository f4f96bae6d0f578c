#pragma once

#include "assocforge/chord_algebra.hpp"

namespace assocforge {

/// Shape of one strand operation, mostly for reporting and validation.
struct StrandOp {
  enum class Kind { extend_left, extend_right, double_strand, remove };
  Kind kind;
  int index;
  int source_strands;
};

/// Face map d_i: n strands -> n+1 strands, 0 <= i <= n+1. An algebra
/// morphism; i = 0 and i = n+1 extend by an empty strand, 1 <= i <= n
/// doubles strand i and lifts chords to the daughters in all ways.
ChordSeries apply_d(int i, const ChordSeries& x);

/// Degeneracy s_i: n strands -> n-1 strands, 1 <= i <= n. Kills every word
/// with a chord on strand i and relabels the rest.
ChordSeries apply_s(int i, const ChordSeries& x);

/// Shifted face map on n+1 strands (x lives on n+1 strands, n = strands-1):
/// equals d_i for i <= n, and for i = n+1 inserts the empty strand between
/// strands n and n+1 (top face followed by a swap of the last two strands).
ChordSeries apply_d_tilde(int i, const ChordSeries& x);

/// Shifted degeneracy on n+1 strands; by definition just s_i there.
ChordSeries apply_s_tilde(int i, const ChordSeries& x);

/// Alternating sums d^n = sum_{i=0}^{n+1} (-1)^i d_i and the shifted
/// variant; both are degree-preserving linear maps.
ChordSeries differential_d(const ChordSeries& x);
ChordSeries differential_d_tilde(const ChordSeries& x);

}  // namespace assocforge
