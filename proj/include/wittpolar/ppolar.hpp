#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "wittpolar/gfq.hpp"

namespace wittpolar {

/// Commutative (not necessarily unital) associative algebra over F_q given
/// by its multiplication table: table[i * dim + j] = e_i * e_j.
struct CommutativeAlgebra {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Vec> table;

  Vec mul(std::span<const Fq> a, std::span<const Fq> b) const;
  bool is_symmetric() const;
  bool is_associative() const;
  std::optional<Vec> unity() const;
};

namespace algebras {

// x F_q[x]/(x^N) with basis x, x^2, ..., x^{N-1}.
CommutativeAlgebra augmentation_ideal(FieldPtr field, std::size_t N);
// F_q[x]/(f) with basis 1, x, ..., x^{deg f - 1}; f monic, little-endian.
CommutativeAlgebra quotient_ring(FieldPtr field, const Vec& monic);
// F_{q^k} as an F_q-algebra.
CommutativeAlgebra field_extension(FieldPtr field, std::size_t k);
// F_q^n with componentwise product.
CommutativeAlgebra split(FieldPtr field, std::size_t n);
CommutativeAlgebra product(const CommutativeAlgebra& a, const CommutativeAlgebra& b);
// New basis b_i = sum_j P(i, j) e_j; P must be invertible.
CommutativeAlgebra change_basis(const CommutativeAlgebra& R, const FqMatrix& P);
// Least monic irreducible polynomial of degree k over the field (k <= 3 or
// prime base field).
Vec irreducible_over(const FqField& field, std::size_t k);

}  // namespace algebras

/// Finite-dimensional p-polar algebra over F_q. The symmetric p-linear
/// product is stored on sorted multisets of basis indices; absent keys are
/// zero.
class PPolarAlgebra {
 public:
  using Key = std::vector<std::size_t>;

  PPolarAlgebra(FieldPtr field, unsigned p, std::size_t dim, std::map<Key, Vec> mu);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::map<Key, Vec>& structure() const noexcept { return mu_; }
  bool has_zero_product() const noexcept { return mu_.empty(); }

  Vec zero() const { return vec_zero(dim_); }
  // mu of exactly p arguments, expanded multilinearly over the basis.
  Vec mu(std::span<const Vec> args) const;
  Vec mu_basis(std::span<const std::size_t> indices) const;

 private:
  std::size_t flat_index(std::span<const std::size_t> indices) const;

  FieldPtr field_;
  unsigned p_;
  std::size_t dim_;
  std::map<Key, Vec> mu_;
  std::vector<Fq> dense_;  // all d^p ordered tuples, each a length-d vector
};

using AlgebraPtr = std::shared_ptr<const PPolarAlgebra>;

// Restriction of the product of R to p-fold products.
PPolarAlgebra polarize(const CommutativeAlgebra& R, unsigned p);
// The p-polar algebra F_q^dim with mu = 0.
PPolarAlgebra trivial_algebra(FieldPtr field, unsigned p, std::size_t dim);
// k<x^{1+i(p-1)}> truncated at x-degree <= max_degree.
PPolarAlgebra truncated_polar_monomials(FieldPtr field, unsigned p, std::size_t max_degree);

// The product of n elements; n must be 1 mod (p-1). Evaluated with the
// left-associative scheme mu(...mu(mu(x1..xp), x_{p+1}..), ...).
Vec mu_eval(const PPolarAlgebra& A, std::span<const Vec> elements);
// x^p = mu(x, ..., x).
Vec p_power(const PPolarAlgebra& A, std::span<const Fq> x);

/// Rooted p-ary tree; leaves carry an index into the element list.
struct MulScheme {
  std::vector<MulScheme> children;
  std::size_t leaf = 0;
  bool is_leaf() const noexcept { return children.empty(); }
};
Vec evaluate_scheme(const PPolarAlgebra& A, const MulScheme& scheme, std::span<const Vec> elements);

struct AssocWitness {
  std::vector<std::size_t> indices;  // 2p-1 basis indices
  std::size_t swap = 0;              // transposition of slots swap, swap+1
  Vec lhs;
  Vec rhs;
};

struct AssocReport {
  bool ok = true;
  std::optional<AssocWitness> witness;
};

AssocReport check_assoc(const PPolarAlgebra& A);

/// Subspace I with mu(a_1, ..., a_{p-1}, i) in I for all a_j in A, i in I.
class PolarIdeal {
 public:
  PolarIdeal(const PPolarAlgebra& A, Subspace space);  // verifies closure
  static PolarIdeal zero(const PPolarAlgebra& A);
  static PolarIdeal whole(const PPolarAlgebra& A);

  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const std::vector<Vec>& basis() const noexcept { return space_.basis(); }
  bool contains(const PPolarAlgebra& A, std::span<const Fq> v) const {
    return space_.contains(*A.field(), v);
  }
  friend bool operator==(const PolarIdeal& a, const PolarIdeal& b) { return a.space_ == b.space_; }

 private:
  struct Unchecked {};
  PolarIdeal(Subspace space, Unchecked) : space_(std::move(space)) {}
  friend PolarIdeal ideal_generated(const PPolarAlgebra&, std::span<const Vec>);
  Subspace space_;
};

PolarIdeal ideal_generated(const PPolarAlgebra& A, std::span<const Vec> generators);
// I^p = <mu(I, ..., I)>.
PolarIdeal ideal_power(const PPolarAlgebra& A, const PolarIdeal& I);
// True iff the s-fold iterate I -> I^p reaches zero.
bool ideal_power_nilpotent(const PPolarAlgebra& A, const PolarIdeal& I, unsigned s);
// Smallest K such that every polar monomial with at least K factors in I
// vanishes, or nullopt if no such K exists.
std::optional<unsigned> vanishing_index(const PPolarAlgebra& A, const PolarIdeal& I);

// {x : x^{p^N} = 0 for some N}, the kernel of the dim-fold iterate of the
// p-power map.
PolarIdeal nilradical(const PPolarAlgebra& A);

/// A / I on the complement spanned by the non-pivot standard basis vectors
/// of I's echelon basis.
struct Quotient {
  AlgebraPtr algebra;
  FqMatrix projection;  // dim(A/I) x dim(A)
  FqMatrix lift;        // dim(A) x dim(A/I)
};
Quotient quotient(const PPolarAlgebra& A, const PolarIdeal& I);

// Induced structure on a subspace closed under mu; basis rows are ambient
// coordinates. Throws InvalidInput if the subspace is not a subalgebra.
PPolarAlgebra induced_algebra(const PPolarAlgebra& A, std::span<const Vec> basis);

struct ScalarExtension {
  AlgebraPtr algebra;
  FieldEmbedding embedding;
  unsigned degree;  // [F_{q^m} : F_q]
};
ScalarExtension extend_scalars(const PPolarAlgebra& A, unsigned m);
// Same structure constants pushed through an explicit embedding.
PPolarAlgebra extend_scalars(const PPolarAlgebra& A, const FieldEmbedding& embedding);

// M (dim B x dim A) is a morphism iff M mu_A(e_I) = mu_B(M e_I) on basis tuples.
bool is_morphism(const PPolarAlgebra& A, const PPolarAlgebra& B, const FqMatrix& M);

/// Monomial of the free p-polar ring: sorted multiset of variable indices.
struct PolarMonomial {
  std::vector<std::size_t> generators;
  friend auto operator<=>(const PolarMonomial&, const PolarMonomial&) = default;
};

// Monomials of degree 1 + i(p-1), i = 0..max_blocks, in graded-lex order.
std::vector<PolarMonomial> free_polar_basis(unsigned p, std::size_t nvars, std::size_t max_blocks);

}  // namespace wittpolar
