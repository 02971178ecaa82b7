#include "mckay/cyclo_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace mckay {

CycMatrix CycMatrix::identity(std::size_t n) {
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1L);
  return m;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  CycMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const CycNum& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const CycNum& b = rhs(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  }
  return out;
}

CycMatrix& CycMatrix::operator*=(const CycNum& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

bool CycMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (!((*this)(r, c) == (*this)(c, r))) return false;
    }
  }
  return true;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (!(a.data_[i] == b.data_[i])) return false;
  }
  return true;
}

std::vector<std::vector<std::complex<double>>> CycMatrix::to_complex() const {
  std::vector<std::vector<std::complex<double>>> out(rows_, std::vector<std::complex<double>>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).to_complex();
  }
  return out;
}

namespace {

// Forward elimination; returns the rank and accumulates the determinant of
// the leading square part when the matrix is square.
std::size_t eliminate(CycMatrix& m, CycNum* det) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  CycNum d(1L);
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) {
      d = CycNum(0L);
      continue;
    }
    if (p != pivot_row) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(pivot_row, k));
      d = -d;
    }
    const CycNum pivot = m(pivot_row, c);
    d *= pivot;
    const CycNum inv = pivot.inverse();
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      if (m(r, c).is_zero()) continue;
      const CycNum f = m(r, c) * inv;
      for (std::size_t k = c; k < cols; ++k) {
        if (!m(pivot_row, k).is_zero()) m(r, k) -= f * m(pivot_row, k);
      }
    }
    ++pivot_row;
  }
  if (det != nullptr) *det = pivot_row == rows ? d : CycNum(0L);
  return pivot_row;
}

}  // namespace

CycNum determinant(CycMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return CycNum(1L);
  CycNum det;
  eliminate(m, &det);
  return det;
}

std::size_t rank(CycMatrix m) { return eliminate(m, nullptr); }

}  // namespace mckay
