#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hk {

/// A permutation of {0, ..., degree-1} stored as its image array.
/// Products read left to right: (a * b)(x) = b(a(x)).
class Perm {
 public:
  using Point = std::uint32_t;

  Perm() = default;
  /// Validates that `images` is a bijection (throws InvalidPermutation).
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  /// 1-based image list as used by the JSON group files.
  static Perm from_one_based(const std::vector<long long>& images);
  /// Cycle notation such as "(1 2)(3 4 5)", 1-based; "()" is the identity.
  static Perm from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  std::size_t order() const;

  std::vector<long long> one_based() const;
  std::string cycle_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace hk
