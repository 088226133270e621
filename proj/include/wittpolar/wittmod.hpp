#pragma once

#include <vector>

#include "wittpolar/ppolar.hpp"
#include "wittpolar/wittuniv.hpp"

namespace wittpolar {

/// Element of W_n(A) = A^n for a finite-dimensional p-polar algebra A.
class WittVector {
 public:
  WittVector(AlgebraPtr algebra, std::vector<Vec> coords);
  static WittVector zero(AlgebraPtr algebra, std::size_t n);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t length() const noexcept { return coords_.size(); }
  const std::vector<Vec>& coords() const noexcept { return coords_; }
  const Vec& operator[](std::size_t i) const { return coords_.at(i); }
  bool is_zero() const;

  friend bool operator==(const WittVector& a, const WittVector& b) { return a.coords_ == b.coords_; }

 private:
  AlgebraPtr algebra_;
  std::vector<Vec> coords_;
};

// pol(F_q): the one-dimensional algebra with mu(e, ..., e) = e.
AlgebraPtr polarized_field(FieldPtr field, unsigned p);

// Evaluates reduced universal polynomials. Variables [0, polar.size()) take
// values in A, the rest take scalar values in F_q (the a-block).
std::vector<Vec> evaluate_polys(const PPolarAlgebra& A, const std::vector<ModPPoly>& polys,
                                std::span<const Vec> polar, std::span<const Fq> scalars = {});

WittVector w_add(const WittVector& x, const WittVector& y);
WittVector w_neg(const WittVector& x);
WittVector w_sub(const WittVector& x, const WittVector& y);
// k * x for any integer k.
WittVector w_multiple(long k, const WittVector& x);
// Product of exactly p Witt vectors.
WittVector w_product(std::span<const WittVector> xs);

WittVector teichmuller(AlgebraPtr algebra, const Vec& a, std::size_t n);
WittVector verschiebung(const WittVector& x);
// (a_0^p, ..., a_{n-1}^p) for x of length n+1.
WittVector frobenius_charp(const WittVector& x);
// Same map through the reduced universal frob polynomials.
WittVector frobenius_by_polys(const WittVector& x);
WittVector truncate(const WittVector& x, std::size_t n);
// Scalar action of a in W_n(pol(F_q)) on x in W_n(A).
WittVector scalar_mul(const WittVector& a, const WittVector& x);
// Componentwise field Frobenius of a scalar Witt vector; k may be negative.
WittVector scalar_frobenius(const WittVector& a, std::int64_t k);
// W_n(f) for a morphism given by its matrix (dim B x dim A).
WittVector witt_map(const FqMatrix& M, AlgebraPtr target, const WittVector& x);

/// Class in CW^u(A) = colim(W_0 -V-> W_1 -V-> ...). The canonical
/// representative has a nonzero leading coordinate; the zero class is empty.
class CwuClass {
 public:
  CwuClass(AlgebraPtr algebra, std::vector<Vec> coords);  // strips leading zeros

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<Vec>& coords() const noexcept { return coords_; }
  std::size_t length() const noexcept { return coords_.size(); }
  bool is_zero() const noexcept { return coords_.empty(); }
  // Representative in W_n, n >= length().
  WittVector representative(std::size_t n) const;

  friend bool operator==(const CwuClass& a, const CwuClass& b) { return a.coords_ == b.coords_; }

 private:
  AlgebraPtr algebra_;
  std::vector<Vec> coords_;
};

CwuClass cwu_class(const WittVector& x);
CwuClass cwu_add(const CwuClass& a, const CwuClass& b);
CwuClass cwu_neg(const CwuClass& a);
// Componentwise p-th power.
CwuClass cwu_F(const CwuClass& a);
// Drops the last coordinate: (..., a_2, a_1, a_0) -> (..., a_2, a_1).
CwuClass cwu_V(const CwuClass& a);

}  // namespace wittpolar
