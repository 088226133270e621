#include <gtest/gtest.h>

#include <random>

#include "wittpolar/cowitt.hpp"

using namespace wittpolar;

namespace {

// pol(xF2[x]/(x^4)), basis x, x^2, x^3
AlgebraPtr nil4() {
  static AlgebraPtr A =
      std::make_shared<const PPolarAlgebra>(polarize(algebras::augmentation_ideal(FqField::build(2, 1), 4), 2));
  return A;
}

Vec x1() { return unit_vector(3, 0); }
Vec x2() { return unit_vector(3, 1); }
Vec x3() { return unit_vector(3, 2); }

CoWittElement finite(const AlgebraPtr& A, CoWittElement::Exceptions e) {
  CoWittElement c(A, A->zero(), std::move(e), {0, 0});
  auto v = cw_validate(c);
  c.set_witness(*v.witness);
  return c;
}

CoWittElement random_cw(const AlgebraPtr& A, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> bit(0, 1);
  Vec tail = A->zero();
  for (auto& c : tail) c = Fq{bit(rng)};
  CoWittElement::Exceptions exc;
  for (long i = 0; i >= -3; --i) {
    if (!bit(rng)) continue;
    Vec v(A->dim());
    for (auto& c : v) c = Fq{bit(rng)};
    exc.emplace(i, v);
  }
  CoWittElement x(A, tail, exc, {0, 0});
  auto v = cw_validate(x);
  x.set_witness(*v.witness);
  return x;
}

}  // namespace

TEST(CoWitt, ConstructorNormalizes) {
  auto A = nil4();
  CoWittElement x(A, x2(), {{0, x1()}, {-1, x2()}}, {0, 0});
  EXPECT_EQ(x.exceptions().size(), 1u);  // entry equal to the tail is not an exception
  EXPECT_EQ(x.at(-5), x2());
  EXPECT_EQ(x.at(0), x1());
  EXPECT_EQ(x.depth(), 0);
  EXPECT_THROW(x.at(1), InvalidInput);
  EXPECT_THROW(CoWittElement(A, x1(), {{1, x1()}}, {0, 0}), InvalidInput);
  EXPECT_THROW(CoWittElement(A, Vec{Fq{1}}, {}, {0, 0}), InvalidInput);
}

TEST(CoWitt, ValidateExamples) {
  auto A = nil4();
  Validation z = cw_validate(CoWittElement::zero(A));
  EXPECT_TRUE(z.valid);
  EXPECT_EQ(z.witness, (std::pair<unsigned, unsigned>{0, 0}));

  CoWittElement x(A, x2(), {{0, x1()}}, {0, 0});
  Validation v = cw_validate(x);
  ASSERT_TRUE(v.valid);
  EXPECT_TRUE(witness_holds(x, *v.witness));
  EXPECT_TRUE(witness_holds(x, {1, 1}));  // (x^2)^2 = 0
  EXPECT_FALSE(witness_holds(x, {0, 1}));  // (x)^2 = (x^2) != 0

  auto F = FqField::build(2, 2);
  auto K = polarized_field(F, 2);
  CoWittElement one(K, Vec{F->one()}, {}, {0, 0});
  EXPECT_FALSE(cw_validate(one).valid);
}

TEST(CoWitt, DeepIdeal) {
  auto A = nil4();
  CoWittElement x(A, x3(), {{0, x1()}, {-2, x2()}}, {0, 0});
  EXPECT_EQ(deep_ideal(x, 0).dim(), 3u);
  EXPECT_EQ(deep_ideal(x, 1).dim(), 2u);
  EXPECT_EQ(deep_ideal(x, 3).dim(), 1u);
}

TEST(CoWitt, CarryMovesTowardZero) {
  auto A = nil4();
  auto a = finite(A, {{-1, x1()}});
  // S_1(x, 0; x, 0) = x * x at index 0, S_0(x; x) = 0 at index -1
  EXPECT_EQ(cw_add(a, a), finite(A, {{0, x2()}}));
  auto b = finite(A, {{0, x1()}});
  EXPECT_EQ(cw_add(b, b), CoWittElement::zero(A));
  EXPECT_EQ(cw_add(a, CoWittElement::zero(A)), a);
}

TEST(CoWitt, FiniteSupportMatchesCwu) {
  std::mt19937_64 rng(4);
  auto A = nil4();
  for (int t = 0; t < 15; ++t) {
    auto x = random_cw(A, rng), y = random_cw(A, rng);
    x = CoWittElement(A, A->zero(), x.exceptions(), {0, 0});
    y = CoWittElement(A, A->zero(), y.exceptions(), {0, 0});
    x.set_witness(*cw_validate(x).witness);
    y.set_witness(*cw_validate(y).witness);
    EXPECT_EQ(cw_add(x, y), cw_from_cwu(cwu_add(cwu_from_cw(x), cwu_from_cw(y))));
    EXPECT_EQ(cw_from_cwu(cwu_from_cw(x)), x);
    EXPECT_EQ(cwu_from_cw(cw_V(x)), cwu_V(cwu_from_cw(x)));
  }
}

TEST(CoWitt, GroupProperties) {
  std::mt19937_64 rng(5);
  auto A = nil4();
  for (int t = 0; t < 15; ++t) {
    auto x = random_cw(A, rng), y = random_cw(A, rng), z = random_cw(A, rng);
    auto s = cw_add(x, y);
    EXPECT_EQ(s, cw_add(y, x));
    EXPECT_EQ(cw_add(s, z), cw_add(x, cw_add(y, z)));
    EXPECT_TRUE(cw_validate(s).valid);
  }
}

TEST(CoWitt, FrobeniusVerschiebung) {
  auto A = nil4();
  EXPECT_EQ(cw_F(CoWittElement::zero(A)), CoWittElement::zero(A));
  EXPECT_EQ(cw_V(CoWittElement::zero(A)), CoWittElement::zero(A));
  CoWittElement x(A, x2(), {{0, x1()}, {-3, x3()}}, {1, 1});
  auto fx = cw_F(x);
  EXPECT_EQ(fx.tail(), A->zero());
  EXPECT_EQ(fx.at(0), x2());
  EXPECT_EQ(fx.at(-3), A->zero());
  auto vx = cw_V(x);
  EXPECT_EQ(vx.at(0), x2());
  EXPECT_EQ(vx.at(-2), x3());
  EXPECT_EQ(vx.tail(), x2());

  std::mt19937_64 rng(6);
  for (int t = 0; t < 10; ++t) {
    auto y = random_cw(A, rng);
    EXPECT_EQ(cw_F(cw_V(y)), cw_multiple(2, y));
    EXPECT_EQ(cw_V(cw_F(y)), cw_multiple(2, y));
  }
}

TEST(CoWitt, MultipleSmallCases) {
  auto A = nil4();
  auto x = finite(A, {{-2, x1()}});
  EXPECT_EQ(cw_multiple(0, x), CoWittElement::zero(A));
  EXPECT_EQ(cw_multiple(1, x), x);
  EXPECT_EQ(cw_multiple(3, x), cw_add(x, cw_add(x, x)));
}

TEST(CoWitt, SumSequenceStabilizes) {
  auto A = nil4();
  CoWittElement x(A, x2(), {{0, x1()}}, {1, 1});
  auto seq = cw_sum_sequence(x, x, 0, 20);
  ASSERT_EQ(seq.size(), 21u);
  EXPECT_EQ(seq[19], seq[20]);
  EXPECT_EQ(cw_add(x, x).at(0), seq.back());
}

TEST(CoWitt, CwuConversionNeedsZeroTail) {
  auto A = nil4();
  CoWittElement x(A, x2(), {}, {1, 1});
  EXPECT_THROW(cwu_from_cw(x), InvalidInput);
}

TEST(CoWitt, OverAFieldOnlyFiniteSupport) {
  auto F = FqField::build(3, 1);
  auto K = polarized_field(F, 3);
  CoWittElement a(K, K->zero(), {{-1, Vec{Fq{1}}}, {0, Vec{Fq{2}}}}, {0, 0});
  auto v = cw_validate(a);
  ASSERT_TRUE(v.valid);
  a.set_witness(*v.witness);
  auto s = cw_add(a, a);
  EXPECT_EQ(s.tail(), K->zero());
  EXPECT_EQ(s, cw_from_cwu(cwu_add(cwu_from_cw(a), cwu_from_cw(a))));
}

TEST(CoWitt, MismatchedAlgebrasRejected) {
  auto A = nil4();
  auto B = std::make_shared<const PPolarAlgebra>(polarize(algebras::split(FqField::build(2, 1), 3), 2));
  EXPECT_THROW(cw_add(CoWittElement::zero(A), CoWittElement::zero(B)), InvalidInput);
}

TEST(CoWitt, StabilizationCap) {
  auto A = nil4();
  CoWittElement x(A, x1(), {}, {0, 3});
  CwAddOptions o;
  o.cap = 1;
  o.repeats = 4;
  EXPECT_THROW(cw_add(x, x, o), StabilizationNotDetected);
}
