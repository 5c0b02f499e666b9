#include "jconst/fq.hpp"

#include <map>

namespace jconst {

FqField::FqField(std::string name, unsigned p, unsigned degree, unsigned reduce_c0,
                 unsigned reduce_c1)
    : name_(std::move(name)), p_(p) {
  q_ = degree == 1 ? p : p * p;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  auto decompose = [&](unsigned a) { return std::pair<unsigned, unsigned>{a % p_, a / p_}; };
  for (unsigned a = 0; a < q_; ++a) {
    auto [a0, a1] = decompose(a);
    neg_[a] = static_cast<std::uint8_t>(((p_ - a0) % p_) + ((p_ - a1) % p_) * p_);
    for (unsigned b = 0; b < q_; ++b) {
      auto [b0, b1] = decompose(b);
      add_[a * q_ + b] = static_cast<std::uint8_t>((a0 + b0) % p_ + ((a1 + b1) % p_) * p_);
      if (degree == 1) {
        mul_[a * q_ + b] = static_cast<std::uint8_t>((a0 * b0) % p_);
      } else {
        // (a0 + a1 x)(b0 + b1 x), then x^2 = reduce_c1 * x + reduce_c0
        unsigned c0 = a0 * b0;
        unsigned c1 = a0 * b1 + a1 * b0;
        unsigned c2 = a1 * b1;
        c0 = (c0 + c2 * reduce_c0) % p_;
        c1 = (c1 + c2 * reduce_c1) % p_;
        mul_[a * q_ + b] = static_cast<std::uint8_t>(c0 + c1 * p_);
      }
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1)
        inv_[a] = static_cast<std::uint8_t>(b);
}

std::uint8_t FqField::inv(std::uint8_t a) const {
  if (a == 0 || inv_[a] == 0)
    fail(Errc::SingularMatrix, "inverse of a non-unit in " + name_);
  return inv_[a];
}

const FqField &FqField::get(const std::string &name) {
  static const std::map<std::string, FqField> fields = [] {
    std::map<std::string, FqField> m;
    m.emplace("F2", FqField("F2", 2, 1, 0, 0));
    m.emplace("F3", FqField("F3", 3, 1, 0, 0));
    m.emplace("F4", FqField("F4", 2, 2, 1, 1));
    m.emplace("F5", FqField("F5", 5, 1, 0, 0));
    m.emplace("F7", FqField("F7", 7, 1, 0, 0));
    m.emplace("F9", FqField("F9", 3, 2, 1, 2));
    m.emplace("F11", FqField("F11", 11, 1, 0, 0));
    m.emplace("F25", FqField("F25", 5, 2, 4, 4));
    return m;
  }();
  auto it = fields.find(name);
  if (it == fields.end())
    fail(Errc::UnsupportedField, "unsupported field " + name);
  return it->second;
}

} // namespace jconst
