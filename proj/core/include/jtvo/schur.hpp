#pragma once

#include "jtvo/family.hpp"
#include "jtvo/matrix.hpp"
#include "jtvo/partition.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace jtvo {

struct EngineOptions {
  // Recompute Jacobi-Trudi type determinants one size larger and compare.
  bool self_check = true;
};

// Truncations H(M,N) and E(M,N), rows and columns indexed lo..hi.
struct HEMatrices {
  int lo = 0;
  int hi = 0;
  PolyMatrix h;
  PolyMatrix e;
};

// Generalized Schur calculus over one generator family. All results are
// memoized; the engine may be shared between threads.
class SchurEngine {
public:
  explicit SchurEngine(FamilyPtr family, EngineOptions options = {});

  const GeneratorFamily& family() const { return *family_; }
  const FamilyPtr& family_ptr() const { return family_; }
  const EngineOptions& options() const { return options_; }

  Poly h(int r, int k) const { return family_->h(r, k); }

  // det[h^(j-1)_{v_i - i + 1}]_{1<=i,j<=size}, v extended by zeros,
  // without straightening.
  Poly jacobi_trudi_determinant(const IntegerVector& v, int size) const;

  Poly schur(const Partition& lambda) const;
  // Straightens first; only the partition form is ever expanded.
  Poly schur(const IntegerVector& v) const;

  // e^(p)_a: 0 for p < a, 1 for p = a, det[h^(-p+j)_{p+1-i}]_{(p-a)x(p-a)} otherwise.
  Poly elementary(int p, int a) const;

  // Constant value of sum_p (-1)^{a-p} h^(p)_b e^(-p)_a; throws
  // IdentityViolation if the sum is not a constant.
  Coefficient newton_sum(int a, int b) const;

  // H_{bp} = h^(p)_{-b},  E_{pa} = (-1)^{a-p} e^(-p)_{-a},  lo <= b,p,a <= hi.
  HEMatrices he_matrices(int lo, int hi) const;

  // s_(m|n) = sum_{p=0}^{n} (-1)^p h^(p)_{m+1} e^(-p)_{-n}
  Poly hook(int m, int n) const;

  // det[s_(lambda_i - i | n - j)]_{n x n}; requires n >= l(lambda).
  Poly giambelli_extended(const Partition& lambda, int n) const;
  // det[s_(alpha_i | beta_j)]_{r x r} in Frobenius coordinates.
  Poly giambelli_frobenius(const Partition& lambda) const;
  // Computes both forms above, checks them against schur(lambda) and
  // returns the r x r value.
  Poly giambelli(const Partition& lambda, int n) const;

  // det[e^(i)_{j - mu_j}]_{k x k} with mu the conjugate of lambda, k = l(mu).
  Poly dual_jacobi_trudi(const Partition& lambda) const;

private:
  FamilyPtr family_;
  EngineOptions options_;

  mutable std::mutex mutex_;
  mutable std::map<Partition, Poly> schur_cache_;
  mutable std::map<std::pair<int, int>, Poly> elementary_cache_;
  mutable std::map<std::pair<int, int>, Poly> hook_cache_;
};

}  // namespace jtvo
