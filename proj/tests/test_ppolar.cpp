#include <gtest/gtest.h>

#include <random>

#include "wittpolar/ppolar.hpp"

using namespace wittpolar;

namespace {

Vec e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

Vec random_vec(const FqField& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(F.size() - 1));
  Vec v(n);
  for (auto& x : v) x = Fq{d(rng)};
  return v;
}

// random p-ary tree over leaves 0..n-1 (n admissible)
MulScheme random_scheme(std::size_t lo, std::size_t n, unsigned p, std::mt19937_64& rng) {
  if (n == 1) return MulScheme{{}, lo};
  // split n into p admissible parts
  std::size_t blocks = (n - 1) / (p - 1);  // number of internal nodes
  std::vector<std::size_t> sizes(p, 1);
  std::size_t extra = blocks - 1;
  std::uniform_int_distribution<std::size_t> pick(0, p - 1);
  for (std::size_t i = 0; i < extra; ++i) sizes[pick(rng)] += p - 1;
  MulScheme s;
  std::size_t at = lo;
  for (auto sz : sizes) {
    s.children.push_back(random_scheme(at, sz, p, rng));
    at += sz;
  }
  return s;
}

}  // namespace

TEST(PPolar, PolarizeAugmentationIdealIsZero) {
  auto F3 = FqField::build(3, 1);
  PPolarAlgebra A = polarize(algebras::augmentation_ideal(F3, 3), 3);
  EXPECT_EQ(A.dim(), 2u);
  EXPECT_TRUE(A.has_zero_product());
  EXPECT_EQ(A.structure(), trivial_algebra(F3, 3, 2).structure());
}

TEST(PPolar, PolarizeUnitalF2) {
  auto F2 = FqField::build(2, 1);
  PPolarAlgebra A = polarize(algebras::split(F2, 1), 2);
  std::vector<std::size_t> key{0, 0};
  EXPECT_EQ(A.mu_basis(key), (Vec{Fq{1}}));
}

TEST(PPolar, PolarizeF4) {
  auto F2 = FqField::build(2, 1);
  PPolarAlgebra A = polarize(algebras::field_extension(F2, 2), 2);
  ASSERT_EQ(A.dim(), 2u);
  std::vector<std::size_t> gg{1, 1};
  EXPECT_EQ(A.mu_basis(gg), (Vec{Fq{1}, Fq{1}}));  // g^2 = g + 1
  EXPECT_TRUE(check_assoc(A).ok);
}

TEST(PPolar, PolarizeRejectsBadTables) {
  auto F2 = FqField::build(2, 1);
  CommutativeAlgebra R{F2, 2, {}};
  R.table.assign(4, vec_zero(2));
  R.table[0 * 2 + 1] = e(2, 0);  // e0 e1 = e0, e1 e0 = 0
  EXPECT_THROW(polarize(R, 2), InvalidInput);
  // symmetric now; e0 e0 = e1, e1 e1 = 0, so (e0 e0) e1 = 0 but e0 (e0 e1) = e1
  R.table[1 * 2 + 0] = e(2, 0);
  R.table[0] = e(2, 1);
  EXPECT_THROW(polarize(R, 2), InvalidInput);
}

TEST(PPolar, ConstructorValidates) {
  auto F3 = FqField::build(3, 1);
  using M = std::map<PPolarAlgebra::Key, Vec>;
  EXPECT_THROW(PPolarAlgebra(F3, 3, 2, M{{{1, 0, 0}, Vec{Fq{1}, Fq{0}}}}), InvalidInput);
  EXPECT_THROW(PPolarAlgebra(F3, 3, 2, M{{{0, 0}, Vec{Fq{1}, Fq{0}}}}), InvalidInput);
  EXPECT_THROW(PPolarAlgebra(F3, 3, 2, M{{{0, 0, 2}, Vec{Fq{1}, Fq{0}}}}), InvalidInput);
  EXPECT_THROW(PPolarAlgebra(F3, 3, 2, M{{{0, 0, 0}, Vec{Fq{1}}}}), InvalidInput);
  EXPECT_THROW(PPolarAlgebra(F3, 2, 2, M{}), InvalidInput);  // wrong characteristic
  EXPECT_THROW(PPolarAlgebra(F3, 4, 2, M{}), InvalidInput);
}

TEST(PPolar, CheckAssocFindsWitness) {
  auto F2 = FqField::build(2, 1);
  using M = std::map<PPolarAlgebra::Key, Vec>;
  PPolarAlgebra A(F2, 2, 2, M{{{0, 0}, e(2, 1)}, {{0, 1}, e(2, 0)}});
  AssocReport r = check_assoc(A);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->indices.size(), 3u);
  EXPECT_NE(r.witness->lhs, r.witness->rhs);
}

TEST(PPolar, TruncatedPolarMonomialsAssociative) {
  for (unsigned p : {2u, 3u}) {
    auto F = FqField::build(p, 1);
    EXPECT_TRUE(check_assoc(truncated_polar_monomials(F, p, 2 * p - 1)).ok);
  }
}

TEST(PPolar, MuEvalLengths) {
  auto F3 = FqField::build(3, 1);
  // x F3[x]/(x^6): basis x..x^5
  PPolarAlgebra A = polarize(algebras::augmentation_ideal(F3, 6), 3);
  std::vector<Vec> one{e(5, 2)};
  EXPECT_EQ(mu_eval(A, one), e(5, 2));
  std::vector<Vec> four(4, e(5, 0));
  EXPECT_THROW(mu_eval(A, four), LengthNotAdmissible);
  std::vector<Vec> five(5, e(5, 0));
  EXPECT_EQ(mu_eval(A, five), e(5, 4));  // x^5
  std::vector<Vec> three{e(5, 0), e(5, 0), e(5, 1)};
  EXPECT_EQ(mu_eval(A, three), e(5, 3));  // x * x * x^2
}

TEST(PPolar, SchemeIndependence) {
  std::mt19937_64 rng(3);
  for (unsigned p : {2u, 3u}) {
    auto F = FqField::build(p, 2);
    auto R = algebras::product(algebras::augmentation_ideal(F, 4), algebras::field_extension(F, 2));
    PPolarAlgebra A = polarize(R, p);
    for (std::size_t blocks = 1; blocks <= 3; ++blocks) {
      std::size_t n = 1 + blocks * (p - 1);
      for (int t = 0; t < 10; ++t) {
        std::vector<Vec> xs;
        for (std::size_t i = 0; i < n; ++i) xs.push_back(random_vec(*F, A.dim(), rng));
        Vec left = mu_eval(A, xs);
        EXPECT_EQ(evaluate_scheme(A, random_scheme(0, n, p, rng), xs), left);
        // agrees with the product in R
        Vec direct = xs[0];
        for (std::size_t i = 1; i < n; ++i) direct = R.mul(direct, xs[i]);
        EXPECT_EQ(left, direct);
      }
    }
  }
}

TEST(PPolar, PPowerAdditive) {
  std::mt19937_64 rng(9);
  for (unsigned p : {2u, 3u, 5u}) {
    auto F = FqField::build(p, 1);
    PPolarAlgebra A = polarize(algebras::quotient_ring(F, Vec{Fq{1}, Fq{0}, Fq{1}, Fq{1}}), p);
    for (int t = 0; t < 20; ++t) {
      Vec x = random_vec(*F, A.dim(), rng), y = random_vec(*F, A.dim(), rng);
      EXPECT_EQ(p_power(A, vec_add(*F, x, y)), vec_add(*F, p_power(A, x), p_power(A, y)));
    }
  }
}

TEST(PPolar, IdealGenerated) {
  auto F2 = FqField::build(2, 1);
  PPolarAlgebra A = polarize(algebras::augmentation_ideal(F2, 4), 2);
  std::vector<Vec> zero{A.zero()};
  EXPECT_EQ(ideal_generated(A, zero).dim(), 0u);
  std::vector<Vec> x{e(3, 0)};
  EXPECT_EQ(ideal_generated(A, x).dim(), 3u);
  std::vector<Vec> x2{e(3, 1)};
  EXPECT_EQ(ideal_generated(A, x2).dim(), 2u);

  PPolarAlgebra B = polarize(algebras::field_extension(F2, 3), 2);
  std::vector<Vec> one{e(3, 0)};
  EXPECT_EQ(ideal_generated(B, one), PolarIdeal::whole(B));
}

TEST(PPolar, IdealConstructorChecksClosure) {
  auto F2 = FqField::build(2, 1);
  PPolarAlgebra A = polarize(algebras::augmentation_ideal(F2, 4), 2);
  EXPECT_THROW(PolarIdeal(A, Subspace(*F2, 3, {e(3, 0)})), InvalidInput);
  EXPECT_NO_THROW(PolarIdeal(A, Subspace(*F2, 3, {e(3, 2)})));
}

TEST(PPolar, IdealPowers) {
  auto F2 = FqField::build(2, 1);
  PPolarAlgebra A = polarize(algebras::augmentation_ideal(F2, 4), 2);
  std::vector<Vec> x{e(3, 0)};
  PolarIdeal I = ideal_generated(A, x);
  PolarIdeal I2 = ideal_power(A, I);
  EXPECT_EQ(I2.dim(), 2u);
  EXPECT_FALSE(ideal_power_nilpotent(A, I, 1));
  EXPECT_TRUE(ideal_power_nilpotent(A, I, 2));
  EXPECT_EQ(vanishing_index(A, I), std::optional<unsigned>(4));  // x^4 = 0, x^3 != 0
  EXPECT_TRUE(ideal_power_nilpotent(A, PolarIdeal::zero(A), 0));

  PPolarAlgebra B = polarize(algebras::split(F2, 2), 2);
  for (unsigned s : {0u, 1u, 5u}) EXPECT_FALSE(ideal_power_nilpotent(B, PolarIdeal::whole(B), s));
  EXPECT_FALSE(vanishing_index(B, PolarIdeal::whole(B)).has_value());
}

TEST(PPolar, Nilradical) {
  auto F2 = FqField::build(2, 1), F3 = FqField::build(3, 1);
  EXPECT_EQ(nilradical(polarize(algebras::field_extension(F2, 2), 2)).dim(), 0u);
  PPolarAlgebra A = polarize(algebras::augmentation_ideal(F3, 3), 3);
  EXPECT_EQ(nilradical(A), PolarIdeal::whole(A));

  // F2 x xF2[x]/(x^2): basis (1,0), (0,x)
  PPolarAlgebra B = polarize(algebras::product(algebras::split(F2, 1), algebras::augmentation_ideal(F2, 2)), 2);
  PolarIdeal N = nilradical(B);
  EXPECT_EQ(N.dim(), 1u);
  EXPECT_TRUE(N.contains(B, e(2, 1)));
}

TEST(PPolar, QuotientByNilradicalIsReduced) {
  auto F3 = FqField::build(3, 1);
  auto R = algebras::product(algebras::quotient_ring(F3, Vec{Fq{0}, Fq{0}, Fq{1}}), algebras::split(F3, 1));
  PPolarAlgebra A = polarize(R, 3);
  PolarIdeal N = nilradical(A);
  EXPECT_EQ(N.dim(), 1u);
  Quotient Q = quotient(A, N);
  EXPECT_EQ(Q.algebra->dim(), 2u);
  EXPECT_EQ(nilradical(*Q.algebra).dim(), 0u);
  EXPECT_TRUE(check_assoc(*Q.algebra).ok);
  EXPECT_TRUE(is_morphism(A, *Q.algebra, Q.projection));
}

TEST(PPolar, ExtendScalars) {
  auto F2 = FqField::build(2, 1);
  PPolarAlgebra A = polarize(algebras::field_extension(F2, 2), 2);
  ScalarExtension one = extend_scalars(A, 1);
  EXPECT_EQ(one.algebra->structure(), A.structure());
  ScalarExtension two = extend_scalars(A, 2);
  EXPECT_EQ(two.algebra->dim(), 2u);
  EXPECT_EQ(two.algebra->field()->size(), 4u);
  EXPECT_EQ(two.degree, 2u);
  for (const auto& [k, v] : A.structure()) EXPECT_EQ(two.algebra->structure().at(k), two.embedding(v));
  EXPECT_THROW(extend_scalars(A, 0), InvalidInput);
}

TEST(PPolar, FreePolarBasis) {
  auto degs = [](const std::vector<PolarMonomial>& b) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& m : b) out.push_back(m.generators);
    return out;
  };
  using V = std::vector<std::vector<std::size_t>>;
  EXPECT_EQ(degs(free_polar_basis(3, 1, 2)), (V{{0}, {0, 0, 0}, {0, 0, 0, 0, 0}}));
  EXPECT_EQ(degs(free_polar_basis(2, 1, 2)), (V{{0}, {0, 0}, {0, 0, 0}}));
  auto b = free_polar_basis(3, 2, 1);
  EXPECT_EQ(b.size(), 6u);
  for (const auto& m : b) EXPECT_EQ(m.generators.size() % 2, 1u);
}
