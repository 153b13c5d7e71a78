#include "qkgr/matrix.hpp"

#include "qkgr/errors.hpp"

namespace qkgr {

PolyMatrix::PolyMatrix(VarSpacePtr space, std::size_t rows, std::size_t cols)
    : space_(std::move(space)), rows_(rows), cols_(cols), data_(rows * cols, Poly(space_)) {}

PolyMatrix PolyMatrix::identity(VarSpacePtr space, std::size_t n) {
  PolyMatrix m(space, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(space, 1);
  return m;
}

PolyMatrix PolyMatrix::column(const std::vector<Poly>& entries) {
  if (entries.empty()) throw DimensionMismatch("empty column");
  PolyMatrix m(entries.front().space(), entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
  return m;
}

Poly& PolyMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
  return data_[i * cols_ + j];
}

const Poly& PolyMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
  return data_[i * cols_ + j];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) {
    throw DimensionMismatch("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                            std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  if (!same_space(space_, o.space_)) throw SpaceMismatch("matrices live in different variable spaces");
  PolyMatrix r(space_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Poly acc(space_);
      for (std::size_t l = 0; l < cols_; ++l) {
        const Poly& a = at(i, l);
        const Poly& b = o.at(l, j);
        if (!a.is_zero() && !b.is_zero()) acc += a * b;
      }
      r.at(i, j) = std::move(acc);
    }
  }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sizes differ");
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sizes differ");
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(space_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

PolyMatrix PolyMatrix::antidiagonal_transpose() const {
  PolyMatrix r(space_, cols_, rows_);
  for (std::size_t i = 0; i < cols_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) r.at(i, j) = at(rows_ - 1 - j, cols_ - 1 - i);
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<Poly> PolyMatrix::column_entries(std::size_t j) const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

namespace {

Poly det_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const auto& space = m.space();
  if (row == m.rows()) return Poly::constant(space, 1);
  Poly acc(space);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Poly& entry = m.at(row, cols[c]);
    if (entry.is_zero()) continue;
    std::size_t col = cols[c];
    cols.erase(cols.begin() + static_cast<long>(c));
    Poly minor = det_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<long>(c), col);
    if (minor.is_zero()) continue;
    if (c % 2 == 0) {
      acc += entry * minor;
    } else {
      acc -= entry * minor;
    }
  }
  return acc;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_rec(m, cols, 0);
}

PolyMatrix PolyMatrix::operator*(const Poly& scalar) const {
  PolyMatrix out(space_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
  return out;
}

}  // namespace qkgr
