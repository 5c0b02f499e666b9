#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jconst/rational.hpp"

namespace jconst {

// The cyclotomic field Q(zeta_m), m <= 24, as rational-coefficient
// polynomial residues modulo the m-th cyclotomic polynomial. m = 1 is Q
// itself. Arithmetic is exact; equality of reduced residues is canonical.
class CycField : public std::enable_shared_from_this<CycField> {
public:
  static std::shared_ptr<const CycField> get(unsigned m);

  unsigned m() const { return m_; }
  unsigned degree() const { return degree_; }

  // Coefficients of the m-th cyclotomic polynomial, constant term first.
  const std::vector<std::int64_t> &modulus() const { return modulus_; }

  // x^(degree+i) reduced to a residue, 0 <= i <= degree-2.
  const std::vector<Rational> &reduction_row(unsigned i) const { return reduction_[i]; }

private:
  explicit CycField(unsigned m);

  unsigned m_;
  unsigned degree_;
  std::vector<std::int64_t> modulus_;
  std::vector<std::vector<Rational>> reduction_; // x^(degree+i) reduced

  friend class Cyc;
};

// An element of a fixed cyclotomic field.
class Cyc {
public:
  Cyc() = default;
  Cyc(std::shared_ptr<const CycField> field, std::vector<Rational> coeffs);

  static Cyc from_rational(const std::shared_ptr<const CycField> &field, const Rational &r);
  static Cyc zeta_power(const std::shared_ptr<const CycField> &field, unsigned k);

  const std::shared_ptr<const CycField> &field() const { return field_; }
  bool is_zero() const;

  friend Cyc operator+(const Cyc &a, const Cyc &b);
  friend Cyc operator-(const Cyc &a, const Cyc &b);
  friend Cyc operator*(const Cyc &a, const Cyc &b);
  Cyc operator-() const;

  // Multiplicative inverse via the extended Euclidean algorithm against
  // the cyclotomic modulus; fails on zero.
  Cyc inverse() const;

  friend bool operator==(const Cyc &a, const Cyc &b);
  friend bool operator!=(const Cyc &a, const Cyc &b) { return !(a == b); }
  friend bool operator<(const Cyc &a, const Cyc &b); // lexicographic, for canonical picks

  std::string to_string() const;

private:
  std::shared_ptr<const CycField> field_;
  std::vector<Rational> c_; // length = field degree

  static void check_same_field(const Cyc &a, const Cyc &b);
};

// Parses a value like "3", "-1/2", "z^3", "1+z-2/3*z^2" over the field.
Cyc parse_cyc(const std::shared_ptr<const CycField> &field, const std::string &text);

} // namespace jconst
