#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wittpolar/gfq.hpp"

using namespace wittpolar;

namespace {

std::vector<Fq> all_elements(const FqField& F) {
  std::vector<Fq> out;
  for (std::uint64_t v = 0; v < F.size(); ++v) out.push_back(Fq{static_cast<std::uint32_t>(v)});
  return out;
}

}  // namespace

TEST(Gfq, BuildRejectsBadParameters) {
  EXPECT_THROW(FqField::build(4, 1), InvalidInput);
  EXPECT_THROW(FqField::build(1, 1), InvalidInput);
  EXPECT_THROW(FqField::build(3, 0), InvalidInput);
  EXPECT_THROW(FqField::build(2, 40), ExtensionCapExceeded);
}

TEST(Gfq, ModulusIsLeastIrreducible) {
  auto F4 = FqField::build(2, 2);
  EXPECT_EQ(F4->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  auto F8 = FqField::build(2, 3);
  EXPECT_EQ(F8->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  auto F9 = FqField::build(3, 2);
  EXPECT_TRUE(is_irreducible(3, F9->modulus()));
  EXPECT_EQ(FqField::build(5, 1)->modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Gfq, WithModulusValidates) {
  EXPECT_THROW(FqField::with_modulus(2, {1, 0, 1}), InvalidInput);  // t^2+1 = (t+1)^2
  EXPECT_THROW(FqField::with_modulus(2, {1, 1, 2}), InvalidInput);
  auto F = FqField::with_modulus(3, {1, 0, 1});  // t^2 + 1 over F3
  EXPECT_EQ(F->size(), 9u);
  Fq t = F->generator();
  EXPECT_EQ(F->mul(t, t), F->from_int(-1));
}

TEST(Gfq, F4Arithmetic) {
  auto F = FqField::build(2, 2);
  Fq w = F->generator();
  EXPECT_EQ(F->mul(w, w), F->add(w, F->one()));
  EXPECT_EQ(F->pow(w, 3), F->one());
  EXPECT_EQ(F->inv(w), F->add(w, F->one()));
  EXPECT_EQ(F->from_int(3), F->one());
  EXPECT_EQ(F->from_int(-1), F->one());
}

TEST(Gfq, FieldAxiomsExhaustive) {
  for (auto [p, m] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 1u}, {2u, 4u}}) {
    auto F = FqField::build(p, m);
    auto E = all_elements(*F);
    for (Fq a : E) {
      EXPECT_EQ(F->add(a, F->neg(a)), F->zero());
      EXPECT_EQ(F->sub(a, a), F->zero());
      EXPECT_EQ(F->mul(a, F->one()), a);
      if (a != F->zero()) {
        EXPECT_EQ(F->mul(a, F->inv(a)), F->one());
      }
      EXPECT_EQ(F->pow(a, F->size()), a);
      for (Fq b : E) {
        EXPECT_EQ(F->mul(a, b), F->mul(b, a));
      }
    }
  }
}

TEST(Gfq, DistributiveRandom) {
  auto F = FqField::build(3, 4);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(F->size() - 1));
  for (int i = 0; i < 500; ++i) {
    Fq a{d(rng)}, b{d(rng)}, c{d(rng)};
    EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
    EXPECT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
  }
}

TEST(Gfq, InverseOfZeroThrows) {
  auto F = FqField::build(3, 1);
  EXPECT_THROW(F->inv(F->zero()), InvalidInput);
}

TEST(Gfq, FrobeniusProperties) {
  auto F = FqField::build(2, 3);
  for (Fq a : all_elements(*F)) {
    EXPECT_EQ(F->frobenius(a, 3), a);
    EXPECT_EQ(F->frobenius(a, 1), F->pow(a, 2));
    EXPECT_EQ(F->frobenius(F->frobenius(a, 1), -1), a);
    for (Fq b : all_elements(*F)) {
      EXPECT_EQ(F->frobenius(F->add(a, b), 1), F->add(F->frobenius(a, 1), F->frobenius(b, 1)));
      EXPECT_EQ(F->frobenius(F->mul(a, b), 2), F->mul(F->frobenius(a, 2), F->frobenius(b, 2)));
    }
  }
  // fixed field of frobenius is F_p
  std::size_t fixed = 0;
  for (Fq a : all_elements(*F)) fixed += F->frobenius(a, 1) == a ? 1 : 0;
  EXPECT_EQ(fixed, 2u);
}

TEST(Gfq, EmbeddingIsRingHomomorphism) {
  auto F4 = FqField::build(2, 2), F16 = FqField::build(2, 4);
  FieldEmbedding e(F4, F16);
  std::set<Fq> image;
  for (Fq a : all_elements(*F4)) {
    image.insert(e(a));
    for (Fq b : all_elements(*F4)) {
      EXPECT_EQ(e(F4->add(a, b)), F16->add(e(a), e(b)));
      EXPECT_EQ(e(F4->mul(a, b)), F16->mul(e(a), e(b)));
    }
  }
  EXPECT_EQ(image.size(), 4u);
  for (Fq x : image) EXPECT_EQ(F16->frobenius(x, 2), x);
}

TEST(Gfq, EmbeddingComposition) {
  auto F2 = FqField::build(2, 1), F4 = FqField::build(2, 2), F16 = FqField::build(2, 4);
  FieldEmbedding a(F2, F4), b(F4, F16);
  FieldEmbedding c = a.then(b);
  EXPECT_EQ(c.source(), F2);
  EXPECT_EQ(c.target(), F16);
  EXPECT_EQ(c(F2->one()), F16->one());
  EXPECT_EQ(FieldEmbedding::identity(F4)(F4->generator()), F4->generator());
}

TEST(Gfq, EmbeddingNeedsDivisibility) {
  EXPECT_THROW(FieldEmbedding(FqField::build(2, 2), FqField::build(2, 3)), InvalidInput);
  EXPECT_THROW(FieldEmbedding(FqField::build(2, 1), FqField::build(3, 2)), InvalidInput);
}

TEST(Gfq, LinearKernelExamples) {
  auto F2 = FqField::build(2, 1);
  EXPECT_TRUE(linear_kernel(*F2, FqMatrix::identity(3)).empty());
  FqMatrix M(2, 2);
  M.at(0, 0) = Fq{1};
  M.at(0, 1) = Fq{1};
  auto K = linear_kernel(*F2, M);
  ASSERT_EQ(K.size(), 1u);
  EXPECT_EQ(K[0], (Vec{Fq{1}, Fq{1}}));
}

TEST(Gfq, RankNullity) {
  auto F = FqField::build(3, 2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> d(0, 8);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
    FqMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) M.at(i, j) = Fq{(t % 3 == 0 && j == 0) ? 0u : d(rng)};
    auto K = linear_kernel(*F, M);
    EXPECT_EQ(rank(*F, M) + K.size(), c);
    for (const auto& k : K) EXPECT_TRUE(vec_is_zero(M.apply(*F, k)));
  }
}

TEST(Gfq, SolveInSpan) {
  auto F = FqField::build(5, 1);
  std::vector<Vec> basis{Vec{Fq{1}, Fq{2}, Fq{0}}, Vec{Fq{0}, Fq{1}, Fq{1}}};
  Vec v = vec_add(*F, vec_scale(*F, Fq{3}, basis[0]), vec_scale(*F, Fq{4}, basis[1]));
  auto c = solve_in_span(*F, basis, v);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (Vec{Fq{3}, Fq{4}}));
  EXPECT_FALSE(solve_in_span(*F, basis, Vec{Fq{0}, Fq{0}, Fq{1}}).has_value());
}

TEST(Gfq, SemilinearKernelExamples) {
  auto F4 = FqField::build(2, 2);
  EXPECT_TRUE(semilinear_kernel(*F4, FqMatrix::identity(1), 1).empty());
  EXPECT_EQ(semilinear_kernel(*F4, FqMatrix(2, 2), 1).size(), 4u);  // F_p-dim of F4^2

  // x -> x^4 - x on F4 vanishes identically
  std::vector<SemilinearTerm> terms{{2, FqMatrix::identity(1)}, {0, FqMatrix::identity(1)}};
  terms[1].matrix.at(0, 0) = F4->from_int(-1);
  EXPECT_EQ(additive_map_kernel(*F4, terms, 1).size(), 2u);

  // x -> x^2 - x on F4 has kernel F2
  terms[0].twist = 1;
  auto K = additive_map_kernel(*F4, terms, 1);
  ASSERT_EQ(K.size(), 1u);
  EXPECT_TRUE(F4->in_prime_field(K[0][0]));
  EXPECT_NE(K[0][0], F4->zero());
}

TEST(Gfq, SemilinearKernelIsKernel) {
  auto F = FqField::build(3, 2);
  FqMatrix M(2, 2);
  M.at(0, 0) = F->generator();
  M.at(0, 1) = F->one();
  M.at(1, 0) = F->mul(F->generator(), F->generator());
  M.at(1, 1) = F->generator();
  auto K = semilinear_kernel(*F, M, 1);
  for (const auto& k : K) EXPECT_TRUE(vec_is_zero(M.apply(*F, vec_frobenius(*F, k, 1))));
  // rows are dependent over F9, so v^{(3)} ranges over a 1-dim F9 line: F3-dim 2
  EXPECT_EQ(K.size(), 2u);
}

TEST(Gfq, SubspaceReduce) {
  auto F = FqField::build(3, 1);
  Subspace S(*F, 3, {Vec{Fq{1}, Fq{1}, Fq{0}}, Vec{Fq{2}, Fq{2}, Fq{0}}});
  EXPECT_EQ(S.dim(), 1u);
  EXPECT_TRUE(S.contains(*F, Vec{Fq{2}, Fq{2}, Fq{0}}));
  EXPECT_FALSE(S.contains(*F, Vec{Fq{1}, Fq{0}, Fq{0}}));
  Vec r = S.reduce(*F, Vec{Fq{1}, Fq{2}, Fq{1}});
  EXPECT_TRUE(S.contains(*F, vec_sub(*F, Vec{Fq{1}, Fq{2}, Fq{1}}, r)));
  EXPECT_EQ(S, Subspace(*F, 3, {Vec{Fq{1}, Fq{1}, Fq{0}}}));
}
