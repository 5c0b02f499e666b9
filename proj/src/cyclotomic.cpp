#include "jconst/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace jconst {

namespace {

using Poly = std::vector<std::int64_t>; // constant term first

// Exact division of integer polynomials, used to peel cyclotomic factors
// out of x^m - 1.
Poly divide_exact(const Poly &num, const Poly &den) {
  Poly rem = num;
  Poly quot(num.size() - den.size() + 1, 0);
  std::int64_t lead = den.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    std::int64_t c = rem[i + den.size() - 1];
    if (c % lead != 0)
      fail(Errc::BadParams, "cyclotomic division not exact");
    std::int64_t q = c / lead;
    quot[i] = q;
    for (std::size_t j = 0; j < den.size(); ++j)
      rem[i + j] -= q * den[j];
  }
  for (std::int64_t c : rem)
    if (c != 0)
      fail(Errc::BadParams, "cyclotomic division left a remainder");
  return quot;
}

Poly cyclotomic_poly(unsigned m) {
  // x^m - 1 divided by the cyclotomic polynomials of the proper divisors.
  Poly result(m + 1, 0);
  result[0] = -1;
  result[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0)
      result = divide_exact(result, cyclotomic_poly(d));
  return result;
}

} // namespace

CycField::CycField(unsigned m) : m_(m) {
  if (m < 1 || m > 24)
    fail(Errc::UnsupportedField, "cyclotomic order must be in [1, 24]");
  modulus_ = cyclotomic_poly(m);
  degree_ = static_cast<unsigned>(modulus_.size() - 1);
  // x^degree = -(lower part); extend row by row up to x^(2*degree-2).
  std::vector<Rational> base(degree_);
  for (unsigned i = 0; i < degree_; ++i)
    base[i] = Rational(-modulus_[i]);
  reduction_.push_back(base);
  for (unsigned k = 1; k + 1 < degree_ || (degree_ == 1 && k < 1); ++k) {
    const std::vector<Rational> &prev = reduction_.back();
    std::vector<Rational> next(degree_);
    // multiply prev by x, reduce the overflowing top term
    Rational top = prev[degree_ - 1];
    for (unsigned i = degree_ - 1; i > 0; --i)
      next[i] = prev[i - 1];
    next[0] = Rational(0);
    for (unsigned i = 0; i < degree_; ++i)
      next[i] = next[i] + top * base[i];
    reduction_.push_back(std::move(next));
  }
}

std::shared_ptr<const CycField> CycField::get(unsigned m) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const CycField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end())
    return it->second;
  auto field = std::shared_ptr<const CycField>(new CycField(m));
  cache[m] = field;
  return field;
}

Cyc::Cyc(std::shared_ptr<const CycField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  c_.resize(field_->degree());
}

Cyc Cyc::from_rational(const std::shared_ptr<const CycField> &field, const Rational &r) {
  std::vector<Rational> c(field->degree());
  c[0] = r;
  return Cyc(field, std::move(c));
}

Cyc Cyc::zeta_power(const std::shared_ptr<const CycField> &field, unsigned k) {
  k %= field->m();
  if (k < field->degree()) {
    std::vector<Rational> c(field->degree());
    c[k] = Rational(1);
    return Cyc(field, std::move(c));
  }
  // the residue class of x; for degree-1 moduli it is the reduction row
  Cyc zeta = field->degree() > 1 ? zeta_power(field, 1)
                                 : Cyc(field, field->reduction_row(0));
  Cyc result = zeta;
  for (unsigned i = 1; i < k; ++i)
    result = result * zeta;
  return result;
}

bool Cyc::is_zero() const {
  for (const Rational &x : c_)
    if (!x.is_zero())
      return false;
  return true;
}

void Cyc::check_same_field(const Cyc &a, const Cyc &b) {
  if (!a.field_ || !b.field_ || a.field_->m() != b.field_->m())
    fail(Errc::BadParams, "cyclotomic operands live in different fields");
}

Cyc operator+(const Cyc &a, const Cyc &b) {
  Cyc::check_same_field(a, b);
  std::vector<Rational> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.c_[i] + b.c_[i];
  return Cyc(a.field_, std::move(c));
}

Cyc operator-(const Cyc &a, const Cyc &b) {
  Cyc::check_same_field(a, b);
  std::vector<Rational> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.c_[i] - b.c_[i];
  return Cyc(a.field_, std::move(c));
}

Cyc Cyc::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = -c_[i];
  return Cyc(field_, std::move(c));
}

Cyc operator*(const Cyc &a, const Cyc &b) {
  Cyc::check_same_field(a, b);
  unsigned deg = a.field_->degree();
  std::vector<Rational> conv(2 * deg - 1);
  for (unsigned i = 0; i < deg; ++i) {
    if (a.c_[i].is_zero())
      continue;
    for (unsigned j = 0; j < deg; ++j)
      conv[i + j] = conv[i + j] + a.c_[i] * b.c_[j];
  }
  std::vector<Rational> c(conv.begin(), conv.begin() + deg);
  for (unsigned k = deg; k < conv.size(); ++k) {
    if (conv[k].is_zero())
      continue;
    const std::vector<Rational> &row = a.field_->reduction_row(k - deg);
    for (unsigned i = 0; i < deg; ++i)
      c[i] = c[i] + conv[k] * row[i];
  }
  return Cyc(a.field_, std::move(c));
}

Cyc Cyc::inverse() const {
  if (is_zero())
    fail(Errc::BadParams, "cyclotomic inverse of zero");
  using RPoly = std::vector<Rational>;
  auto trim = [](RPoly &p) {
    while (!p.empty() && p.back().is_zero())
      p.pop_back();
  };
  // Extended Euclid on (this, modulus) over Q[x].
  RPoly r0(field_->modulus().size());
  for (std::size_t i = 0; i < r0.size(); ++i)
    r0[i] = Rational(field_->modulus()[i]);
  RPoly r1(c_.begin(), c_.end());
  trim(r1);
  RPoly s0{}, s1{Rational(1)}; // coefficients of `this`
  while (true) {
    if (r1.size() == 1) {
      // unit remainder: inverse = s1 / r1[0], reduced through zeta powers
      // since s1 may exceed the field degree
      Rational inv = r1[0].inverse();
      Cyc result = Cyc::from_rational(field_, Rational(0));
      for (std::size_t i = 0; i < s1.size(); ++i) {
        if (s1[i].is_zero())
          continue;
        Cyc term = Cyc::zeta_power(field_, static_cast<unsigned>(i % field_->m()));
        result = result + term * Cyc::from_rational(field_, s1[i] * inv);
      }
      return result;
    }
    // divide r0 by r1
    RPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
    RPoly rem = r0;
    Rational lead = r1.back();
    for (std::size_t i = q.size(); i-- > 0;) {
      Rational c = rem[i + r1.size() - 1] / lead;
      q[i] = c;
      if (c.is_zero())
        continue;
      for (std::size_t j = 0; j < r1.size(); ++j)
        rem[i + j] = rem[i + j] - c * r1[j];
    }
    trim(rem);
    if (rem.empty())
      fail(Errc::BadParams, "cyclotomic inverse of a zero divisor");
    // s2 = s0 - q * s1
    RPoly s2(std::max(s0.size(), q.size() + s1.size()));
    for (std::size_t i = 0; i < s0.size(); ++i)
      s2[i] = s0[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        s2[i + j] = s2[i + j] - q[i] * s1[j];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

bool operator==(const Cyc &a, const Cyc &b) {
  Cyc::check_same_field(a, b);
  return a.c_ == b.c_;
}

bool operator<(const Cyc &a, const Cyc &b) {
  Cyc::check_same_field(a, b);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i])
      return a.c_[i] < b.c_[i];
  }
  return false;
}

std::string Cyc::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero())
      continue;
    if (!first)
      out << " + ";
    first = false;
    if (i == 0) {
      out << c_[i].to_string();
    } else {
      out << c_[i].to_string() << "*z";
      if (i > 1)
        out << "^" << i;
    }
  }
  return first ? "0" : out.str();
}

Cyc parse_cyc(const std::shared_ptr<const CycField> &field, const std::string &text) {
  Cyc result = Cyc::from_rational(field, Rational(0));
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto parse_int = [&]() -> std::int64_t {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i)
      fail(Errc::ParseError, "expected an integer in '" + text + "'");
    return std::stoll(text.substr(start, i - start));
  };
  bool expect_term = true;
  int sign = 1;
  while (true) {
    skip_ws();
    if (i == text.size()) {
      if (expect_term)
        fail(Errc::ParseError, "dangling sign in '" + text + "'");
      break;
    }
    if (!expect_term) {
      if (text[i] == '+')
        sign = 1;
      else if (text[i] == '-')
        sign = -1;
      else
        fail(Errc::ParseError, "expected + or - in '" + text + "'");
      ++i;
      expect_term = true;
      continue;
    }
    if (text[i] == '-') {
      sign = -sign;
      ++i;
      continue;
    }
    if (text[i] == '+') {
      ++i;
      continue;
    }
    // term: [rational][*][z[^k]] with at least one part
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::int64_t num = parse_int();
      std::int64_t den = 1;
      skip_ws();
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = parse_int();
      }
      coef = Rational(num, den);
      have_coef = true;
      skip_ws();
      if (i < text.size() && text[i] == '*')
        ++i;
      skip_ws();
    }
    unsigned zexp = 0;
    bool have_z = false;
    if (i < text.size() && (text[i] == 'z' || text[i] == 'Z')) {
      ++i;
      have_z = true;
      zexp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        zexp = static_cast<unsigned>(parse_int());
      }
    }
    if (!have_coef && !have_z)
      fail(Errc::ParseError, "unexpected character in '" + text + "'");
    if (have_z && field->m() == 1)
      zexp = 0; // zeta_1 = 1
    Cyc term = have_z ? Cyc::zeta_power(field, zexp) : Cyc::from_rational(field, Rational(1));
    term = term * Cyc::from_rational(field, sign < 0 ? -coef : coef);
    result = result + term;
    sign = 1;
    expect_term = false;
  }
  return result;
}

} // namespace jconst
