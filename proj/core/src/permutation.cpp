#include "assocforge/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace assocforge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("permutation images are not a bijection of 1..n");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("transposition indices out of range");
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int p = 1; p <= size(); ++p) im[static_cast<size_t>(images_[p - 1] - 1)] = p;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int p = 1; p <= size(); ++p)
    if (images_[p - 1] != p) return false;
  return true;
}

Permutation compose(const Permutation& after, const Permutation& first) {
  if (after.size() != first.size())
    throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> im(static_cast<size_t>(first.size()));
  for (int p = 1; p <= first.size(); ++p) im[p - 1] = after(first(p));
  return Permutation(std::move(im));
}

}  // namespace assocforge
