#include <gtest/gtest.h>

#include "wittpolar/fgl.hpp"

using namespace wittpolar;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

PTypicalLog hazewinkel(unsigned p, std::size_t D) { return typicalize_log(log_one_plus(D), p); }

AlgebraPtr share(PPolarAlgebra A) { return std::make_shared<const PPolarAlgebra>(std::move(A)); }

}  // namespace

TEST(Fgl, TypicalizeIdentityIsAdditive) {
  PTypicalLog lg = typicalize_log(TruncSeries::identity(10), 3);
  EXPECT_EQ(lg.l, (std::vector<Rational>{q(1), q(0), q(0)}));
  EXPECT_EQ(exp_from_log(lg), TruncSeries::identity(10));
  BivariateLaw F = group_law(lg, 10);
  std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> want{{{1, 0}, q(1)}, {{0, 1}, q(1)}};
  EXPECT_EQ(F.terms, want);
}

TEST(Fgl, TypicalPartOfLogAtTwo) {
  EXPECT_EQ(hazewinkel(2, 15).l, (std::vector<Rational>{q(1), q(-1, 2), q(-1, 4), q(-1, 8)}));
  EXPECT_EQ(hazewinkel(3, 10).l, (std::vector<Rational>{q(1), q(1, 3), q(1, 9)}));
}

TEST(Fgl, TypicalizeKeepsTypicalSeries) {
  PTypicalLog lg = make_log(3, 10, {q(1), q(1, 3), q(1, 9)});
  EXPECT_EQ(typicalize_log(lg.series(), 3).l, lg.l);
}

TEST(Fgl, MakeLogValidates) {
  EXPECT_THROW(make_log(2, 10, {q(2)}), InvalidInput);
  EXPECT_THROW(make_log(2, 3, {q(1), q(1), q(1)}), InvalidInput);  // x^4 is beyond D = 3
  EXPECT_THROW(make_log(4, 10, {q(1)}), InvalidInput);
  EXPECT_THROW(typicalize_log(TruncSeries(5, {q(0), q(2), q(0), q(0), q(0), q(0)}), 2), InvalidInput);
}

TEST(Fgl, ExpInvertsLog) {
  for (unsigned p : {2u, 3u, 5u}) {
    PTypicalLog lg = hazewinkel(p, 25);
    TruncSeries ex = exp_from_log(lg);
    EXPECT_EQ(lg.series().compose(ex), TruncSeries::identity(25));
    EXPECT_EQ(ex.compose(lg.series()), TruncSeries::identity(25));
  }
}

TEST(Fgl, SupportCheck) {
  std::vector<Rational> c(6, q(0));
  c[1] = q(1);
  c[5] = q(1);
  EXPECT_TRUE(support_check(TruncSeries(5, c), 3).ok);
  c[2] = q(1);
  SupportReport r = support_check(TruncSeries(5, c), 3);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.offenders, (std::vector<std::size_t>{2}));
  EXPECT_TRUE(support_check(TruncSeries(5, c), 2).ok);  // p = 2 allows everything
}

TEST(Fgl, ExpSupportAtThree) {
  PTypicalLog lg = make_log(3, 25, {q(1), q(1, 3), q(1, 9)});
  EXPECT_TRUE(support_check(exp_from_log(lg), 3).ok);
  PTypicalLog odd = make_log(5, 25, {q(1), q(-7, 3), q(2, 11)});
  EXPECT_TRUE(support_check(exp_from_log(odd), 5).ok);
}

TEST(Fgl, GroupLawProperties) {
  for (unsigned p : {2u, 3u}) {
    PTypicalLog lg = hazewinkel(p, 15);
    BivariateLaw F = group_law(lg, 15);
    EXPECT_TRUE(F.unit_ok);
    EXPECT_TRUE(F.symmetric);
    EXPECT_TRUE(F.polar_degrees);
    EXPECT_TRUE(non_integral_terms(F).empty());
    EXPECT_TRUE(associativity_check(group_law(lg, 10), 10));
    EXPECT_EQ(F.coefficient(1, 0), q(1));
    EXPECT_EQ(F.coefficient(0, 0), q(0));
  }
  EXPECT_THROW(group_law(hazewinkel(2, 8), 9), InvalidInput);
}

TEST(Fgl, LawAtTwoLowTerms) {
  // log = x - x^2/2 - x^4/4 - ...: F(x, y) = x + y + xy + ...
  BivariateLaw F = group_law(hazewinkel(2, 6), 6);
  EXPECT_EQ(F.coefficient(1, 1), q(1));
}

TEST(Fgl, NonIntegralLogGivesNonIntegralLaw) {
  // l_1 = 1/9 is not the typical shape; the law picks up 3 in denominators
  PTypicalLog lg = make_log(3, 12, {q(1), q(1, 9), q(0)});
  EXPECT_FALSE(non_integral_terms(group_law(lg, 12)).empty());
}

TEST(Fgl, MultiplicativeCoordinate) {
  TruncSeries f = multiplicative_coordinate(hazewinkel(2, 12));
  EXPECT_EQ(f[1], q(1));
  EXPECT_TRUE(non_integral_terms(f, 2).empty());
  EXPECT_EQ(reduce_rational(q(-1, 2), 3), 1u);
  EXPECT_EQ(reduce_rational(q(5), 3), 2u);
  EXPECT_THROW(reduce_rational(q(1, 3), 3), LawNotIntegral);
}

TEST(Fgl, AbelianInvariants) {
  // Z/4 x Z/2: orders 1, 2, 2, 2, 4, 4, 4, 4
  EXPECT_EQ(abelian_invariants(2, {1, 2, 2, 2, 4, 4, 4, 4}), (std::vector<std::uint64_t>{4, 2}));
  EXPECT_EQ(abelian_invariants(3, {1, 3, 3, 3, 3, 3, 3, 3, 3}), (std::vector<std::uint64_t>{3, 3}));
  EXPECT_EQ(abelian_invariants(2, {1}), (std::vector<std::uint64_t>{}));
}

TEST(Fgl, StarGroupOnTruncatedPolynomials) {
  auto F2 = FqField::build(2, 1);
  auto A = share(polarize(algebras::augmentation_ideal(F2, 4), 2));
  StarGroup G = mu_pinfty_group(A, group_law(hazewinkel(2, 10), 10));
  Vec x = unit_vector(3, 0);
  EXPECT_EQ(G.star(x, A->zero()), x);
  EXPECT_TRUE(vec_is_zero(G.power(x, 4)));
  EXPECT_FALSE(vec_is_zero(G.power(x, 2)));
  GroupSummary s = summarize(G);
  EXPECT_EQ(s.order, 8u);
  EXPECT_TRUE(s.abelian && s.associative && s.p_group);
  EXPECT_EQ(s.invariants, (std::vector<std::uint64_t>{4, 2}));
}

TEST(Fgl, StarGroupZeroProductIsElementary) {
  auto F3 = FqField::build(3, 1);
  auto A = share(polarize(algebras::augmentation_ideal(F3, 3), 3));
  GroupSummary s = summarize(mu_pinfty_group(A, group_law(hazewinkel(3, 10), 10)));
  EXPECT_EQ(s.order, 9u);
  EXPECT_EQ(s.invariants, (std::vector<std::uint64_t>{3, 3}));
}

TEST(Fgl, StarGroupRejections) {
  auto F3 = FqField::build(3, 1);
  auto A = share(polarize(algebras::augmentation_ideal(F3, 4), 3));
  BivariateLaw bad;
  bad.p = 3;
  bad.precision = 10;
  bad.terms = {{{1, 0}, q(1)}, {{0, 1}, q(1)}, {{1, 1}, q(1)}};
  bad.unit_ok = bad.symmetric = true;
  bad.polar_degrees = false;
  EXPECT_THROW(mu_pinfty_group(A, bad), LawNotPolar);

  BivariateLaw frac = bad;
  frac.terms = {{{1, 0}, q(1)}, {{0, 1}, q(1)}, {{2, 1}, q(1, 3)}, {{1, 2}, q(1, 3)}};
  frac.polar_degrees = true;
  EXPECT_THROW(mu_pinfty_group(A, frac), LawNotIntegral);

  BivariateLaw low = group_law(hazewinkel(3, 2), 2);
  EXPECT_THROW(mu_pinfty_group(A, low), InvalidInput);

  auto F2 = FqField::build(2, 1);
  auto B = share(polarize(algebras::split(F2, 2), 2));
  StarGroup G = mu_pinfty_group(B, group_law(hazewinkel(2, 4), 4));
  EXPECT_EQ(G.elements().size(), 1u);
  EXPECT_THROW(G.star(Vec{Fq{1}, Fq{0}}, B->zero()), NonNilpotentElement);
}
