#include <doctest.h>

#include <random>

#include "assocforge/cosimplicial.hpp"

using namespace assocforge;

namespace {

ChordSeries gen(int n, int M, int i, int j) {
  return ChordSeries::generator(n, M, i, j);
}

ChordSeries random_series(std::mt19937& rng, int n, int M, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> len(0, M);
  std::uniform_int_distribution<int> strand(1, n);
  ChordSeries out(n, M);
  for (int t = 0; t < terms; ++t) {
    ChordWord w;
    const int d = len(rng);
    for (int k = 0; k < d; ++k) {
      int i = strand(rng), j = strand(rng);
      while (j == i) j = strand(rng);
      w.emplace_back(i, j);
    }
    out += ChordSeries::monomial(ChordMonomial(n, w), M, Rational(coeff(rng)));
  }
  return out;
}

TensorSeries map_both_sides(int i, const TensorSeries& t, int out_strands) {
  TensorSeries out(out_strands, t.max_degree());
  for (const auto& [key, c] : t.terms()) {
    const ChordSeries l = apply_d(
        i, ChordSeries::monomial(ChordMonomial(out_strands - 1, key.first),
                                 t.max_degree()));
    const ChordSeries r = apply_d(
        i, ChordSeries::monomial(ChordMonomial(out_strands - 1, key.second),
                                 t.max_degree()));
    out += c * TensorSeries::product_of(l, r);
  }
  return out;
}

}  // namespace

TEST_CASE("face map generator table") {
  const int M = 1;
  CHECK(apply_d(1, gen(2, M, 1, 2)) == gen(3, M, 1, 3) + gen(3, M, 2, 3));
  CHECK(apply_d(0, gen(2, M, 1, 2)) == gen(3, M, 2, 3));
  CHECK(apply_d(3, gen(2, M, 1, 2)) == gen(3, M, 1, 2));
  CHECK(apply_d(2, gen(2, M, 1, 2)) == gen(3, M, 1, 2) + gen(3, M, 1, 3));
  CHECK_THROWS_AS(apply_d(4, gen(2, M, 1, 2)), std::out_of_range);
}

TEST_CASE("degeneracy generator table") {
  const int M = 1;
  CHECK(apply_s(1, gen(2, M, 1, 2)).is_zero());
  CHECK(apply_s(3, gen(3, M, 1, 2)) == gen(2, M, 1, 2));
  CHECK(apply_s(2, gen(3, M, 1, 3)) == gen(2, M, 1, 2));
  CHECK_THROWS_AS(apply_s(0, gen(2, M, 1, 2)), std::out_of_range);
  CHECK_THROWS_AS(apply_s(3, gen(2, M, 1, 2)), std::out_of_range);
}

TEST_CASE("shifted top face inserts the empty strand before the last one") {
  // Pinned by explicit composition (extend right, then swap the last two
  // strands): chords on the old last strand move up by one.
  const int M = 1;
  CHECK(apply_d_tilde(3, gen(3, M, 1, 2)) == gen(4, M, 1, 2));
  CHECK(apply_d_tilde(3, gen(3, M, 1, 3)) == gen(4, M, 1, 4));
  CHECK(apply_d_tilde(3, gen(3, M, 2, 3)) == gen(4, M, 2, 4));
  CHECK(apply_d_tilde(0, gen(3, M, 1, 2)) == gen(4, M, 2, 3));
  for (int i = 0; i <= 2; ++i)
    CHECK(apply_d_tilde(i, gen(3, M, 1, 2)) == apply_d(i, gen(3, M, 1, 2)));
}

TEST_CASE("differential on powers of the two-strand generator") {
  const int M = 3;
  const ChordSeries t12 = gen(2, M, 1, 2);
  CHECK(differential_d(t12).is_zero());
  CHECK_FALSE(differential_d(t12 * t12).is_zero());
  CHECK_FALSE(differential_d(t12 * t12 * t12).is_zero());
  CHECK(differential_d(ChordSeries::one(2, M) * Rational(5)).is_zero());
}

TEST_CASE("face and degeneracy maps are algebra morphisms") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 3;
    const ChordSeries x = random_series(rng, n, 4, 3);
    const ChordSeries y = random_series(rng, n, 4, 3);
    for (int i = 0; i <= n + 1; ++i)
      CHECK(apply_d(i, x * y) == apply_d(i, x) * apply_d(i, y));
    for (int i = 1; i <= n; ++i)
      CHECK(apply_s(i, x * y) == apply_s(i, x) * apply_s(i, y));
  }
}

TEST_CASE("coface identities d_j d_i = d_i d_{j-1} for i < j") {
  std::mt19937 rng(77);
  for (int n = 2; n <= 4; ++n) {
    const ChordSeries x = random_series(rng, n, 3, 3);
    for (int i = 0; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 2; ++j)
        CHECK(apply_d(j, apply_d(i, x)) == apply_d(i, apply_d(j - 1, x)));
  }
}

TEST_CASE("both differentials square to zero on random inputs") {
  std::mt19937 rng(31337);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const ChordSeries x = random_series(rng, n, 4, 3);
      CHECK(differential_d(differential_d(x)).is_zero());
      CHECK(differential_d_tilde(differential_d_tilde(x)).is_zero());
    }
}

TEST_CASE("face maps commute with the coproduct") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 2;
    const ChordSeries x = random_series(rng, n, 3, 3);
    for (int i = 0; i <= n + 1; ++i)
      CHECK(coproduct(apply_d(i, x)) == map_both_sides(i, coproduct(x), n + 1));
  }
}

TEST_CASE("shifted degeneracy is the plain one") {
  std::mt19937 rng(5150);
  const ChordSeries x = random_series(rng, 3, 3, 3);
  for (int i = 1; i <= 3; ++i) CHECK(apply_s_tilde(i, x) == apply_s(i, x));
}
