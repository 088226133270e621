#include <gtest/gtest.h>

#include <random>

#include "wittpolar/etale.hpp"

using namespace wittpolar;

namespace {

PPolarAlgebra pol(const CommutativeAlgebra& R) { return polarize(R, R.field->characteristic()); }

Vec e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

bool is_idempotent(const PPolarAlgebra& A, const Vec& v) { return p_power(A, v) == v; }

FqMatrix random_invertible(const FqField& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(F.size() - 1));
  for (;;) {
    FqMatrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M.at(i, j) = Fq{d(rng)};
    if (rank(F, M) == n) return M;
  }
}

}  // namespace

TEST(Etale, PowerRelationF4) {
  auto F2 = FqField::build(2, 1);
  PPolarAlgebra A = pol(algebras::field_extension(F2, 2));
  auto [j, alpha] = power_relation(A, e(2, 1));
  EXPECT_EQ(j, 2u);
  EXPECT_EQ(alpha, (std::vector<Fq>{F2->one(), F2->zero()}));
}

TEST(Etale, FindIdempotentF4) {
  auto F2 = FqField::build(2, 1);
  PPolarAlgebra A = pol(algebras::field_extension(F2, 2));
  IdempotentResult r = find_idempotent(A, e(2, 1));
  EXPECT_EQ(r.extension_degree, 1u);
  EXPECT_EQ(r.beta, F2->one());
  EXPECT_EQ(r.e, e(2, 0));  // g + g^2 = 1
}

TEST(Etale, FindIdempotentAlreadyIdempotent) {
  auto F2 = FqField::build(2, 1);
  PPolarAlgebra A = pol(algebras::split(F2, 2));
  IdempotentResult r = find_idempotent(A, e(2, 0));
  EXPECT_EQ(r.j, 1u);
  EXPECT_EQ(r.e, e(2, 0));
}

TEST(Etale, FindIdempotentOutputIsIdempotent) {
  std::mt19937_64 rng(3);
  for (unsigned p : {2u, 3u}) {
    auto F = FqField::build(p, 1);
    auto R = algebras::product(algebras::field_extension(F, 3), algebras::field_extension(F, 2));
    PPolarAlgebra A = pol(algebras::change_basis(R, random_invertible(*F, R.dim, rng)));
    IdempotentResult r = find_idempotent(A);
    PPolarAlgebra Ae = extend_scalars(A, r.embedding);
    EXPECT_FALSE(vec_is_zero(r.e));
    EXPECT_TRUE(is_idempotent(Ae, r.e));
  }
}

TEST(Etale, FindIdempotentRejectsNilpotents) {
  auto F3 = FqField::build(3, 1);
  PPolarAlgebra A = pol(algebras::product(algebras::split(F3, 1), algebras::augmentation_ideal(F3, 2)));
  EXPECT_THROW(find_idempotent(A), NotReduced);
}

TEST(Etale, SplitOnce) {
  auto F2 = FqField::build(2, 1);
  PPolarAlgebra A = pol(algebras::split(F2, 3));
  SplitResult unit = split_once(A, Vec{Fq{1}, Fq{1}, Fq{1}});
  EXPECT_EQ(unit.ker_basis.size(), 0u);
  EXPECT_EQ(unit.im_part.dim(), 3u);

  SplitResult s = split_once(A, e(3, 1));
  EXPECT_EQ(s.ker_part.dim(), 2u);
  EXPECT_EQ(s.im_part.dim(), 1u);
  EXPECT_EQ(s.f.mul(*F2, s.f), s.f);
  EXPECT_TRUE(check_assoc(s.ker_part).ok);
}

TEST(Etale, DecomposeScrambledSplit) {
  std::mt19937_64 rng(4);
  for (unsigned p : {2u, 3u}) {
    auto F = FqField::build(p, 1);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto R = algebras::change_basis(algebras::split(F, n), random_invertible(*F, n, rng));
      Decomposition D = decompose(pol(R));
      EXPECT_EQ(D.factor_count(), n);
      EXPECT_EQ(D.base_extension_degree, 1u);
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(D.frobenius_permutation[i], i);
    }
  }
}

TEST(Etale, DecomposeF4OverF2) {
  auto F2 = FqField::build(2, 1);
  Decomposition D = decompose(pol(algebras::field_extension(F2, 2)));
  EXPECT_EQ(D.base_extension_degree, 2u);
  EXPECT_EQ(D.factor_count(), 2u);
  EXPECT_EQ(D.frobenius_permutation, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(cycle_notation(D.frobenius_permutation), "(1 2)");
  PPolarAlgebra Ae = extend_scalars(*D.reduced, FieldEmbedding(F2, D.field));
  for (const auto& v : D.idempotents) EXPECT_TRUE(is_idempotent(Ae, v));
  // distinct factors are orthogonal
  std::vector<Vec> pair{D.idempotents[0], D.idempotents[1]};
  EXPECT_TRUE(vec_is_zero(Ae.mu(pair)));
}

TEST(Etale, DecomposeMixedWithNilradical) {
  auto F3 = FqField::build(3, 1);
  auto R = algebras::product(algebras::field_extension(F3, 2),
                             algebras::product(algebras::split(F3, 1), algebras::augmentation_ideal(F3, 3)));
  Decomposition D = decompose(pol(R));
  EXPECT_EQ(D.reduced_dim, 3u);
  EXPECT_EQ(D.factor_count(), 3u);
  EXPECT_EQ(D.base_extension_degree, 2u);
  EXPECT_EQ(permutation_cycles(D.frobenius_permutation).size(), 2u);
}

TEST(Etale, DecomposeZeroProduct) {
  auto F3 = FqField::build(3, 1);
  Decomposition D = decompose(pol(algebras::augmentation_ideal(F3, 3)));
  EXPECT_EQ(D.factor_count(), 0u);
  EXPECT_EQ(D.reduced_dim, 0u);
}

TEST(Etale, GeometricPoints) {
  auto F2 = FqField::build(2, 1);
  GeometricPoints a = geometric_points(pol(algebras::split(F2, 2)));
  EXPECT_EQ(a.count, 2u);
  EXPECT_EQ(a.orbits.size(), 2u);
  GeometricPoints b = geometric_points(pol(algebras::field_extension(F2, 2)));
  EXPECT_EQ(b.count, 2u);
  ASSERT_EQ(b.orbits.size(), 1u);
  EXPECT_EQ(b.orbits[0].size(), 2u);
  EXPECT_EQ(geometric_points(pol(algebras::augmentation_ideal(F2, 4))).count, 0u);
  // F2[x]/(x^2 (x^2 + x + 1)): one rational point and a conjugate pair
  auto Q = algebras::quotient_ring(F2, Vec{Fq{0}, Fq{0}, Fq{1}, Fq{1}, Fq{1}});
  EXPECT_EQ(geometric_points(pol(Q)).count, 3u);
}

TEST(Etale, HomCheck) {
  auto F4 = FqField::build(2, 2);
  EXPECT_TRUE(hom_check(*F4, Vec{Fq{0}, Fq{0}, Fq{0}}));
  EXPECT_TRUE(hom_check(*F4, Vec{Fq{0}, Fq{1}, Fq{0}}));
  EXPECT_FALSE(hom_check(*F4, Vec{Fq{1}, Fq{1}, Fq{0}}));
  EXPECT_FALSE(hom_check(*F4, Vec{F4->generator(), Fq{0}}));
  auto F3 = FqField::build(3, 1);
  EXPECT_TRUE(hom_check(*F3, Vec{Fq{2}, Fq{0}}));
}

TEST(Etale, PhiMatrix) {
  auto F3 = FqField::build(3, 1);
  EXPECT_EQ(phi_matrix(*F3, FqMatrix::identity(2)), (PhiMatrix{{1, 0}, {0, 1}}));
  FqMatrix proj(1, 2);
  proj.at(0, 0) = Fq{2};
  EXPECT_EQ(phi_matrix(*F3, proj), (PhiMatrix{{1, 0}}));

  // composable morphisms F^3 -> F^2 -> F^2
  FqMatrix M(2, 3), N(2, 2);
  M.at(0, 2) = Fq{1};
  M.at(1, 0) = Fq{2};
  N.at(0, 1) = Fq{2};
  N.at(1, 1) = Fq{1};
  FqMatrix NM = N.mul(*F3, M);
  EXPECT_EQ(phi_matrix(*F3, NM), phi_multiply(phi_matrix(*F3, N), phi_matrix(*F3, M)));
}

TEST(Etale, CycleNotation) {
  EXPECT_EQ(cycle_notation({0}), "(1)");
  EXPECT_EQ(cycle_notation({1, 2, 0, 3}), "(1 2 3)(4)");
  EXPECT_EQ(permutation_cycles({1, 0, 2}).size(), 2u);
}
