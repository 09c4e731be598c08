#include "jtvo/schur.hpp"

#include "jtvo/errors.hpp"

#include <string>

namespace jtvo {

namespace {

template <class Map, class Key, class F>
Poly memoized(std::mutex& mutex, Map& cache, const Key& key, F&& compute) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Poly value = compute();
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(value)).first->second;
}

int entry_or_zero(const IntegerVector& v, int i) {
  return (i >= 1 && i <= v.length()) ? v.entries[static_cast<std::size_t>(i - 1)] : 0;
}

}  // namespace

SchurEngine::SchurEngine(FamilyPtr family, EngineOptions options)
    : family_(std::move(family)), options_(options) {
  if (!family_) throw DomainError("SchurEngine needs a family");
}

Poly SchurEngine::jacobi_trudi_determinant(const IntegerVector& v, int size) const {
  const auto n = static_cast<std::size_t>(size);
  return det(PolyMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    const int row = static_cast<int>(i) + 1;
    return h(static_cast<int>(j), entry_or_zero(v, row) - row + 1);
  }));
}

Poly SchurEngine::schur(const Partition& lambda) const {
  return memoized(mutex_, schur_cache_, lambda, [&] {
    const IntegerVector v(lambda);
    Poly value = jacobi_trudi_determinant(v, lambda.length());
    if (options_.self_check && jacobi_trudi_determinant(v, lambda.length() + 1) != value)
      throw IdentityViolation(family_->name() + ": Jacobi-Trudi determinant of (" + lambda.to_string() +
                              ") does not stabilize");
    return value;
  });
}

Poly SchurEngine::schur(const IntegerVector& v) const {
  const SignedPartition sp = straighten(v);
  if (sp.sign == 0) return {};
  Poly s = schur(sp.shape);
  return sp.sign > 0 ? s : -s;
}

Poly SchurEngine::elementary(int p, int a) const {
  if (p < a) return {};
  if (p == a) return 1;
  return memoized(mutex_, elementary_cache_, std::make_pair(p, a), [&] {
    const auto n = static_cast<std::size_t>(p - a);
    return det(PolyMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
      return h(-p + static_cast<int>(j) + 1, p - static_cast<int>(i));
    }));
  });
}

Coefficient SchurEngine::newton_sum(int a, int b) const {
  Poly sum;
  for (int p = -b; p <= -a; ++p) {
    const Poly term = h(p, b) * elementary(-p, a);
    if (sign_power(a - p) > 0)
      sum += term;
    else
      sum -= term;
  }
  if (!sum.is_constant())
    throw IdentityViolation(family_->name() + ": Newton sum (a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                            ") is not constant: " + sum.to_string());
  return sum.constant_term();
}

HEMatrices SchurEngine::he_matrices(int lo, int hi) const {
  if (lo >= hi) throw RangeError("he_matrices requires lo < hi");
  const auto n = static_cast<std::size_t>(hi - lo + 1);
  HEMatrices out{lo, hi, PolyMatrix(n, n), PolyMatrix(n, n)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const int row = lo + static_cast<int>(r);
      const int col = lo + static_cast<int>(c);
      out.h(r, c) = h(col, -row);
      const Poly e = elementary(-row, -col);
      out.e(r, c) = sign_power(col - row) > 0 ? e : -e;
    }
  return out;
}

Poly SchurEngine::hook(int m, int n) const {
  if (n < 0) return {};
  return memoized(mutex_, hook_cache_, std::make_pair(m, n), [&] {
    Poly sum;
    for (int p = 0; p <= n; ++p) {
      const Poly term = h(p, m + 1) * elementary(-p, -n);
      if (p % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    return sum;
  });
}

Poly SchurEngine::giambelli_extended(const Partition& lambda, int n) const {
  if (n < lambda.length()) throw RangeError("giambelli: n must be at least the length of the partition");
  const auto size = static_cast<std::size_t>(n);
  return det(PolyMatrix::generate(size, size, [&](std::size_t i, std::size_t j) {
    const int row = static_cast<int>(i) + 1;
    const int col = static_cast<int>(j) + 1;
    return hook(lambda.part(row) - row, n - col);
  }));
}

Poly SchurEngine::giambelli_frobenius(const Partition& lambda) const {
  const FrobeniusCoords fc = to_frobenius(lambda);
  const auto r = static_cast<std::size_t>(fc.rank());
  return det(PolyMatrix::generate(r, r, [&](std::size_t i, std::size_t j) {
    return hook(fc.alphas[i], fc.betas[j]);
  }));
}

Poly SchurEngine::giambelli(const Partition& lambda, int n) const {
  const Poly extended = giambelli_extended(lambda, n);
  const Poly compact = giambelli_frobenius(lambda);
  if (extended != compact || compact != schur(lambda))
    throw IdentityViolation(family_->name() + ": Giambelli forms disagree for (" + lambda.to_string() + ")");
  return compact;
}

Poly SchurEngine::dual_jacobi_trudi(const Partition& lambda) const {
  const Partition mu = conjugate(lambda);
  const auto k = static_cast<std::size_t>(mu.length());
  return det(PolyMatrix::generate(k, k, [&](std::size_t i, std::size_t j) {
    const int row = static_cast<int>(i) + 1;
    const int col = static_cast<int>(j) + 1;
    return elementary(row, col - mu.part(col));
  }));
}

}  // namespace jtvo
