#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jconst/fq.hpp"
#include "jconst/perm_group.hpp"

namespace jconst {

// Row-major square matrix over a small finite field.
struct FqMatrix {
  std::string field;
  unsigned dim = 0;
  std::vector<std::uint8_t> entries;

  static FqMatrix identity(const std::string &field, unsigned dim);

  std::uint8_t at(unsigned i, unsigned j) const { return entries[i * dim + j]; }

  FqMatrix operator*(const FqMatrix &rhs) const;

  bool invertible() const; // Gaussian elimination over the field

  // Kronecker product; both factors must live over the same field.
  static FqMatrix kronecker(const FqMatrix &a, const FqMatrix &b);
};

enum class MatrixAction {
  AffineNonzero, // on the q^dim - 1 nonzero vectors; always faithful
  Projective,    // on the (q^dim - 1)/(q - 1) lines; kernel = scalars
};

MatrixAction matrix_action_from_string(const std::string &s);

// Permutation image of the matrix group generated by `generators` under
// the chosen action on vectors or lines.
PermGroup matrix_to_perm(const std::string &field, unsigned dim,
                         const std::vector<FqMatrix> &generators, MatrixAction action);

} // namespace jconst
