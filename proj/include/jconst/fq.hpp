#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jconst/error.hpp"

namespace jconst {

// Small finite fields used by the matrix-group constructors. Elements are
// codes 0..q-1. Prime fields store residues; quadratic extensions F_{p^2}
// store c0 + c1*x as c0 + c1*p, with x reduced by a fixed irreducible:
//   F4:  x^2 = x + 1
//   F9:  x^2 = 2x + 1   (from x^2 + x + 2)
//   F25: x^2 = 4x + 4   (from x^2 + x + 1; the polynomial is irreducible
//        over F5, unlike x^2 + x + 3 which has the root 1)
class FqField {
public:
  static const FqField &get(const std::string &name); // "F2".."F25"

  const std::string &name() const { return name_; }
  unsigned q() const { return q_; }
  unsigned p() const { return p_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + neg_[b]]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const;

private:
  FqField(std::string name, unsigned p, unsigned degree, unsigned reduce_c0, unsigned reduce_c1);

  std::string name_;
  unsigned q_;
  unsigned p_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

} // namespace jconst
