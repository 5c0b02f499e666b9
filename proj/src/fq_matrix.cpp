#include "jconst/fq_matrix.hpp"

#include <algorithm>

namespace jconst {

FqMatrix FqMatrix::identity(const std::string &field, unsigned dim) {
  FqMatrix m;
  m.field = field;
  m.dim = dim;
  m.entries.assign(static_cast<std::size_t>(dim) * dim, 0);
  for (unsigned i = 0; i < dim; ++i)
    m.entries[i * dim + i] = 1;
  return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix &rhs) const {
  if (field != rhs.field || dim != rhs.dim)
    fail(Errc::BadParams, "matrix product: field or dimension mismatch");
  const FqField &F = FqField::get(field);
  FqMatrix out;
  out.field = field;
  out.dim = dim;
  out.entries.assign(static_cast<std::size_t>(dim) * dim, 0);
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned k = 0; k < dim; ++k) {
      std::uint8_t a = at(i, k);
      if (!a)
        continue;
      for (unsigned j = 0; j < dim; ++j)
        out.entries[i * dim + j] =
            F.add(out.entries[i * dim + j], F.mul(a, rhs.at(k, j)));
    }
  return out;
}

bool FqMatrix::invertible() const {
  const FqField &F = FqField::get(field);
  std::vector<std::uint8_t> m = entries;
  unsigned n = dim;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && m[pivot * n + col] == 0)
      ++pivot;
    if (pivot == n)
      return false;
    if (pivot != col)
      for (unsigned j = 0; j < n; ++j)
        std::swap(m[pivot * n + j], m[col * n + j]);
    std::uint8_t inv = F.inv(m[col * n + col]);
    for (unsigned j = 0; j < n; ++j)
      m[col * n + j] = F.mul(m[col * n + j], inv);
    for (unsigned row = 0; row < n; ++row) {
      if (row == col || m[row * n + col] == 0)
        continue;
      std::uint8_t factor = m[row * n + col];
      for (unsigned j = 0; j < n; ++j)
        m[row * n + j] = F.sub(m[row * n + j], F.mul(factor, m[col * n + j]));
    }
  }
  return true;
}

FqMatrix FqMatrix::kronecker(const FqMatrix &a, const FqMatrix &b) {
  if (a.field != b.field)
    fail(Errc::BadParams, "kronecker: fields differ");
  const FqField &F = FqField::get(a.field);
  FqMatrix out;
  out.field = a.field;
  out.dim = a.dim * b.dim;
  out.entries.assign(static_cast<std::size_t>(out.dim) * out.dim, 0);
  for (unsigned i = 0; i < a.dim; ++i)
    for (unsigned j = 0; j < a.dim; ++j)
      for (unsigned k = 0; k < b.dim; ++k)
        for (unsigned l = 0; l < b.dim; ++l)
          out.entries[(i * b.dim + k) * out.dim + (j * b.dim + l)] =
              F.mul(a.at(i, j), b.at(k, l));
  return out;
}

MatrixAction matrix_action_from_string(const std::string &s) {
  if (s == "affine")
    return MatrixAction::AffineNonzero;
  if (s == "projective")
    return MatrixAction::Projective;
  fail(Errc::ParseError, "unknown matrix action: " + s);
}

namespace {

// Vectors are encoded in base q, least significant coordinate first;
// code 0 is the zero vector and is excluded.
std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i)
    r = checked_mul(r, base);
  return r;
}

void decode(std::uint64_t code, unsigned q, unsigned dim, std::uint8_t *v) {
  for (unsigned i = 0; i < dim; ++i) {
    v[i] = static_cast<std::uint8_t>(code % q);
    code /= q;
  }
}

std::uint64_t encode(const std::uint8_t *v, unsigned q, unsigned dim) {
  std::uint64_t code = 0;
  for (unsigned i = dim; i-- > 0;)
    code = code * q + v[i];
  return code;
}

void apply(const FqField &F, const FqMatrix &m, const std::uint8_t *in, std::uint8_t *out) {
  for (unsigned i = 0; i < m.dim; ++i) {
    std::uint8_t s = 0;
    for (unsigned j = 0; j < m.dim; ++j)
      s = F.add(s, F.mul(m.at(i, j), in[j]));
    out[i] = s;
  }
}

// Scale so the first nonzero coordinate becomes 1.
void normalize_line(const FqField &F, unsigned dim, std::uint8_t *v) {
  for (unsigned i = 0; i < dim; ++i) {
    if (v[i]) {
      std::uint8_t inv = F.inv(v[i]);
      for (unsigned j = 0; j < dim; ++j)
        v[j] = F.mul(v[j], inv);
      return;
    }
  }
}

} // namespace

PermGroup matrix_to_perm(const std::string &field, unsigned dim,
                         const std::vector<FqMatrix> &generators, MatrixAction action) {
  const FqField &F = FqField::get(field);
  if (dim < 1 || (action == MatrixAction::Projective && dim < 2))
    fail(Errc::BadParams, "matrix action needs dim >= 1 (projective: >= 2)");
  for (const FqMatrix &g : generators) {
    if (g.field != field || g.dim != dim)
      fail(Errc::BadParams, "generator field or dimension mismatch");
    if (!g.invertible())
      fail(Errc::SingularMatrix, "singular generator matrix over " + field);
  }

  unsigned q = F.q();
  std::uint64_t nonzero = pow_u64(q, dim) - 1;
  if (nonzero > kMaxDegree)
    fail(Errc::TooLarge, "vector action degree exceeds 65536 points");

  // Map vector codes to point indices.
  std::vector<std::int32_t> point_of(nonzero + 1, -1);
  std::size_t degree = 0;
  std::vector<std::uint8_t> v(dim), w(dim);
  if (action == MatrixAction::AffineNonzero) {
    degree = static_cast<std::size_t>(nonzero);
    for (std::uint64_t code = 1; code <= nonzero; ++code)
      point_of[code] = static_cast<std::int32_t>(code - 1);
  } else {
    for (std::uint64_t code = 1; code <= nonzero; ++code) {
      decode(code, q, dim, v.data());
      normalize_line(F, dim, v.data());
      if (encode(v.data(), q, dim) == code)
        point_of[code] = static_cast<std::int32_t>(degree++);
    }
  }

  std::vector<Perm> perm_gens;
  for (const FqMatrix &g : generators) {
    std::vector<Point> images(degree);
    for (std::uint64_t code = 1; code <= nonzero; ++code) {
      if (point_of[code] < 0)
        continue;
      decode(code, q, dim, v.data());
      apply(F, g, v.data(), w.data());
      if (action == MatrixAction::Projective)
        normalize_line(F, dim, w.data());
      std::int32_t target = point_of[encode(w.data(), q, dim)];
      if (target < 0)
        fail(Errc::BadParams, "matrix image is not a canonical point");
      images[static_cast<std::size_t>(point_of[code])] = static_cast<Point>(target);
    }
    perm_gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(perm_gens));
}

} // namespace jconst
