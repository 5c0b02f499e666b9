#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "jconst/error.hpp"

namespace jconst {

using Point = std::uint16_t;

constexpr std::size_t kMaxDegree = 1u << 16;

// A permutation of {0, ..., degree-1}, stored as its image array.
// Composition convention, fixed globally: (p * q)(x) = p(q(x)), i.e. the
// right factor acts first.
class Perm {
public:
  explicit Perm(std::size_t degree);

  explicit Perm(std::vector<Point> images);

  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const { return images_.size(); }

  Point operator[](Point x) const { return images_[x]; }

  bool is_identity() const;

  Perm operator*(const Perm &rhs) const;

  Perm inverse() const;

  Perm conjugated_by(const Perm &g) const; // g * (*this) * g^-1

  bool commutes_with(const Perm &other) const;

  std::uint64_t order() const;

  bool operator==(const Perm &rhs) const { return images_ == rhs.images_; }
  bool operator!=(const Perm &rhs) const { return images_ != rhs.images_; }
  bool operator<(const Perm &rhs) const { return images_ < rhs.images_; }

  const std::vector<Point> &images() const { return images_; }

  std::vector<std::vector<Point>> cycles() const;

  std::string to_string() const; // cycle notation, "()" for the identity

private:
  std::vector<Point> images_;
};

} // namespace jconst
