#pragma once

#include "jtvo/poly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace jtvo {

// Dense row-major matrix of polynomials.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);

  template <class F>
  static PolyMatrix generate(std::size_t rows, std::size_t cols, F&& entry) {
    PolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(i, j);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  bool is_upper_unitriangular() const;
  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

// Exact determinant by first-row cofactor expansion, memoizing each minor
// by the set of columns it still uses (its first row is implied by the
// size of that set). The empty matrix has determinant 1.
Poly det(const PolyMatrix& m);

}  // namespace jtvo
