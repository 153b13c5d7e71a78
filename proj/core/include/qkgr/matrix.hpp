#pragma once

#include <cstddef>
#include <vector>

#include "qkgr/poly.hpp"

namespace qkgr {

// Dense matrix of polynomials, 0-based indexing.
class PolyMatrix {
 public:
  PolyMatrix(VarSpacePtr space, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(VarSpacePtr space, std::size_t n);
  static PolyMatrix column(const std::vector<Poly>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarSpacePtr& space() const { return space_; }

  Poly& at(std::size_t i, std::size_t j);
  const Poly& at(std::size_t i, std::size_t j) const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const Poly& scalar) const;
  bool operator==(const PolyMatrix& o) const;

  PolyMatrix transpose() const;
  // Reflection in the anti-diagonal: result(i, j) = this(n-1-j, m-1-i).
  PolyMatrix antidiagonal_transpose() const;
  bool is_zero() const;
  std::vector<Poly> column_entries(std::size_t j) const;

 private:
  VarSpacePtr space_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> data_;
};

// Determinant by cofactor expansion, skipping zero entries.
Poly determinant(const PolyMatrix& m);

}  // namespace qkgr
