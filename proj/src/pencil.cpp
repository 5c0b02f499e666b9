#include "jconst/pencil.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace jconst {

ProjPoint ProjPoint::finite(const Cyc &value) {
  return ProjPoint{value, Cyc::from_rational(value.field(), Rational(1))};
}

ProjPoint ProjPoint::infinity(const std::shared_ptr<const CycField> &field) {
  return ProjPoint{Cyc::from_rational(field, Rational(1)), Cyc::from_rational(field, Rational(0))};
}

bool ProjPoint::same_as(const ProjPoint &other) const {
  return (num * other.den - other.num * den).is_zero();
}

Moebius::Moebius(Cyc a, Cyc b, Cyc c, Cyc d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if ((a_ * d_ - b_ * c_).is_zero())
    fail(Errc::DegeneratePoints, "fractional linear map with zero determinant");
  normalize();
}

Moebius Moebius::identity(const std::shared_ptr<const CycField> &field) {
  Cyc one = Cyc::from_rational(field, Rational(1));
  Cyc zero = Cyc::from_rational(field, Rational(0));
  return Moebius(one, zero, zero, one);
}

void Moebius::normalize() {
  for (Cyc *entry : {&a_, &b_, &c_, &d_}) {
    if (!entry->is_zero()) {
      Cyc inv = entry->inverse();
      a_ = a_ * inv;
      b_ = b_ * inv;
      c_ = c_ * inv;
      d_ = d_ * inv;
      return;
    }
  }
}

ProjPoint Moebius::apply(const ProjPoint &p) const {
  return ProjPoint{a_ * p.num + b_ * p.den, c_ * p.num + d_ * p.den};
}

Moebius Moebius::compose(const Moebius &rhs) const {
  return Moebius(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                 c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_);
}

Moebius Moebius::inverse() const { return Moebius(d_, -b_, -c_, a_); }

bool operator==(const Moebius &x, const Moebius &y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::string Moebius::to_string() const {
  std::ostringstream out;
  out << "[" << a_.to_string() << ", " << b_.to_string() << "; " << c_.to_string() << ", "
      << d_.to_string() << "]";
  return out.str();
}

namespace {

// Matrix of z -> ((z - p0)(p2 - p1)) / ((z - p1)(p2 - p0)), the unique map
// sending (p0, p1, p2) to (0, infinity, 1).
Moebius to_standard_triple(const std::array<Cyc, 3> &p) {
  Cyc d01 = p[2] - p[1];
  Cyc d02 = p[2] - p[0];
  return Moebius(d01, -(p[0] * d01), d02, -(p[1] * d02));
}

} // namespace

Moebius moebius_through(const std::array<Cyc, 3> &sources, const std::array<Cyc, 3> &targets) {
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = i + 1; j < 3; ++j) {
      if (sources[i] == sources[j] || targets[i] == targets[j])
        fail(Errc::DegeneratePoints, "three-point interpolation needs distinct points");
    }
  Moebius a = to_standard_triple(sources);
  Moebius b = to_standard_triple(targets);
  Moebius map = b.inverse().compose(a);
  for (unsigned i = 0; i < 3; ++i)
    if (!map.apply(ProjPoint::finite(sources[i])).same_as(ProjPoint::finite(targets[i])))
      fail(Errc::BadParams, "three-point interpolation failed verification");
  return map;
}

void PencilConfig::validate() const {
  if (!field)
    fail(Errc::InvalidPencil, "pencil needs a coefficient field");
  if (lambdas.size() < 3)
    fail(Errc::InvalidPencil, "pencil needs at least three marked values");
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = i + 1; j < lambdas.size(); ++j)
      if (lambdas[i] == lambdas[j])
        fail(Errc::InvalidPencil, "pencil values must be pairwise distinct");
}

AutWResult aut_w(const PencilConfig &config) {
  config.validate();
  const auto &lam = config.lambdas;
  std::size_t n_points = lam.size();

  std::vector<Moebius> maps;
  std::vector<Perm> perms;

  // A fractional linear map is fixed by the images of three points, so
  // every candidate arises from an ordered triple of targets.
  for (std::size_t i = 0; i < n_points; ++i) {
    for (std::size_t j = 0; j < n_points; ++j) {
      for (std::size_t k = 0; k < n_points; ++k) {
        if (i == j || j == k || i == k)
          continue;
        Moebius candidate =
            moebius_through({lam[0], lam[1], lam[2]}, {lam[i], lam[j], lam[k]});
        std::vector<Point> images(n_points);
        bool ok = true;
        for (std::size_t t = 0; t < n_points && ok; ++t) {
          ProjPoint image = candidate.apply(ProjPoint::finite(lam[t]));
          ok = false;
          if (image.is_infinity())
            break;
          for (std::size_t s = 0; s < n_points; ++s) {
            if (image.same_as(ProjPoint::finite(lam[s]))) {
              images[t] = static_cast<Point>(s);
              ok = true;
              break;
            }
          }
        }
        if (!ok)
          continue;
        if (std::find(maps.begin(), maps.end(), candidate) != maps.end())
          continue;
        maps.push_back(std::move(candidate));
        perms.emplace_back(std::move(images));
      }
    }
  }

  AutWResult result{PermGroup(n_points, perms), std::move(maps)};
  // A map fixing three or more points is the identity, so the permutation
  // action is faithful and the group order equals the number of maps.
  if (result.group.order() != result.maps.size())
    fail(Errc::BadParams, "pencil stabilizer is not faithfully represented");
  return result;
}

std::uint64_t gamma_order(unsigned n) {
  if (n < 4)
    fail(Errc::OutOfRange, "the two-torsion count needs ambient dimension n >= 4");
  if (n >= 63)
    fail(Errc::Overflow, "two-torsion count exceeds 64 bits");
  return 1ull << n;
}

} // namespace jconst
