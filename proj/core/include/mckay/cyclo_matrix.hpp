#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "mckay/cyclo.hpp"

namespace mckay {

/// Dense row-major matrix over cyclotomic numbers.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CycMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycNum& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycNum& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  CycMatrix transpose() const;
  CycMatrix operator*(const CycMatrix& rhs) const;
  CycMatrix& operator*=(const CycNum& s);

  bool is_symmetric() const;

  friend bool operator==(const CycMatrix& a, const CycMatrix& b);

  std::vector<std::vector<std::complex<double>>> to_complex() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> data_;
};

/// Determinant by Gaussian elimination over the cyclotomic field.
CycNum determinant(CycMatrix m);

/// Rank over the cyclotomic field.
std::size_t rank(CycMatrix m);

}  // namespace mckay
