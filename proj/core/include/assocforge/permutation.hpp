#pragma once

#include <initializer_list>
#include <vector>

namespace assocforge {

/// A bijection of {1,...,n}, stored as the image list: images()[p-1] is the
/// image of position p.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images)
      : Permutation(std::vector<int>(images)) {}

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int p) const { return images_[p - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Function composition: compose(after, first)(p) = after(first(p)).
Permutation compose(const Permutation& after, const Permutation& first);

}  // namespace assocforge
