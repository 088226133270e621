#pragma once

#include <string>
#include <vector>

#include "wittpolar/ppolar.hpp"

namespace wittpolar {

struct IdempotentResult {
  Vec e;                    // coordinates over embedding.target()
  FieldEmbedding embedding;  // from the algebra's field to the field of e
  unsigned extension_degree = 1;
  std::size_t j = 0;         // y^{p^j} = sum_{i<j} alpha_i y^{p^i}
  std::vector<Fq> alpha;     // over the algebra's field
  Fq beta{};                 // nonzero root of the additive polynomial, over the target
};

// Minimal j and coefficients alpha with y^{p^j} = sum_{i<j} alpha_i y^{p^i}.
std::pair<std::size_t, std::vector<Fq>> power_relation(const PPolarAlgebra& A, const Vec& y);

// Nonzero e with e^p = e built from y. Extends scalars by the least degree
// in which the additive polynomial has a nonzero root; beta_choice picks
// among the nonzero roots in a fixed order. Throws NotReduced if A has a
// nonzero nilradical.
IdempotentResult find_idempotent(const PPolarAlgebra& A, const Vec& y, std::size_t beta_choice = 0);
IdempotentResult find_idempotent(const PPolarAlgebra& A);

struct SplitResult {
  std::vector<Vec> ker_basis;  // ambient coordinates
  std::vector<Vec> im_basis;
  PPolarAlgebra ker_part;
  PPolarAlgebra im_part;
  FqMatrix f;  // y -> mu(e, ..., e, y)
};

// A = ker(f) x im(f) for f(y) = mu(e, ..., e, y).
SplitResult split_once(const PPolarAlgebra& A, const Vec& e);

struct Decomposition {
  unsigned base_extension_degree = 1;  // m, relative to the input field
  FieldPtr field;                      // F_{q^m}
  std::size_t reduced_dim = 0;
  FqMatrix reduction;                  // A -> A/Nil(A), over the input field
  AlgebraPtr reduced;                  // A/Nil(A)
  // Factor idempotents in A/Nil(A) tensor F_{q^m}, each the least of its
  // F_p^x multiples (all of them satisfy e^p = e).
  std::vector<Vec> idempotents;
  std::vector<std::size_t> frobenius_permutation;  // e_i^{(q)} in F_p^x e_{perm[i]}
  FqMatrix change_of_basis;            // rows are the idempotents

  std::size_t factor_count() const noexcept { return idempotents.size(); }
};

Decomposition decompose(const PPolarAlgebra& A);

std::vector<std::vector<std::size_t>> permutation_cycles(const std::vector<std::size_t>& perm);
// One-line cycle notation with 1-based labels, e.g. "(1 2)(3)".
std::string cycle_notation(const std::vector<std::size_t>& perm);

struct GeometricPoints {
  std::size_t count = 0;
  std::vector<std::vector<std::size_t>> orbits;
};

GeometricPoints geometric_points(const PPolarAlgebra& A);

// Row vector of a linear map (F)^n -> F between split algebras.
bool hom_check(const FqField& F, std::span<const Fq> row);

using PhiMatrix = std::vector<std::vector<int>>;
PhiMatrix phi_matrix(const FqField& F, const FqMatrix& M);
PhiMatrix phi_multiply(const PhiMatrix& a, const PhiMatrix& b);

}  // namespace wittpolar
