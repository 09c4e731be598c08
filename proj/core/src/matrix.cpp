#include "jtvo/matrix.hpp"

#include "jtvo/errors.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace jtvo {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

bool PolyMatrix::is_upper_unitriangular() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != Poly(1)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

namespace {

class CofactorExpansion {
public:
  explicit CofactorExpansion(const PolyMatrix& m) : m_(m), n_(m.rows()) {}

  // Determinant of the minor on rows n - |free| .. n-1 and columns `free`.
  Poly minor(std::uint64_t free) {
    if (free == 0) return 1;
    if (auto it = memo_.find(free); it != memo_.end()) return it->second;
    const std::size_t row = n_ - static_cast<std::size_t>(std::popcount(free));
    Poly acc;
    int position = 0;
    for (std::size_t col = 0; col < n_; ++col) {
      const std::uint64_t bit = std::uint64_t{1} << col;
      if (!(free & bit)) continue;
      const Poly& entry = m_(row, col);
      if (!entry.is_zero()) {
        Poly sub = minor(free & ~bit);
        if (!sub.is_zero()) {
          if (position % 2 == 0)
            acc += entry * sub;
          else
            acc -= entry * sub;
        }
      }
      ++position;
    }
    return memo_.emplace(free, std::move(acc)).first->second;
  }

private:
  const PolyMatrix& m_;
  std::size_t n_;
  std::unordered_map<std::uint64_t, Poly> memo_;
};

}  // namespace

Poly det(const PolyMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n > 63) throw ShapeError("determinant: matrices larger than 63x63 are not supported");
  CofactorExpansion expansion(m);
  return expansion.minor((std::uint64_t{1} << n) - 1);
}

}  // namespace jtvo
