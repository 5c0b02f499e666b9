#include "jconst/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jconst {

Perm::Perm(std::size_t degree) {
  if (degree < 1 || degree > kMaxDegree)
    fail(Errc::OutOfRange, "permutation degree must be in [1, 65536]");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxDegree)
    fail(Errc::OutOfRange, "permutation degree must be in [1, 65536]");
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      fail(Errc::BadParams, "image array is not a bijection");
    seen[y] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>> &cycles) {
  Perm result(degree);
  for (const auto &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        fail(Errc::OutOfRange, "cycle entry exceeds degree");
      result.images_[from] = to;
    }
  }
  // reject overlapping cycles
  return Perm(std::move(result.images_));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::operator*(const Perm &rhs) const {
  if (degree() != rhs.degree())
    fail(Errc::DegreeMismatch, "compose: degrees differ");
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = images_[rhs.images_[i]];
  return Perm(std::move(out));
}

Perm Perm::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[images_[i]] = static_cast<Point>(i);
  return Perm(std::move(out));
}

Perm Perm::conjugated_by(const Perm &g) const {
  if (degree() != g.degree())
    fail(Errc::DegreeMismatch, "conjugate: degrees differ");
  // (g p g^-1)(g(x)) = g(p(x))
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[g.images_[i]] = g.images_[images_[i]];
  return Perm(std::move(out));
}

bool Perm::commutes_with(const Perm &other) const {
  if (degree() != other.degree())
    fail(Errc::DegreeMismatch, "commute test: degrees differ");
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[other.images_[i]] != other.images_[images_[i]])
      return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Perm::to_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream out;
  for (const auto &cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

} // namespace jconst
