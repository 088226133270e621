#include <gtest/gtest.h>

#include "wittpolar/cowitt.hpp"
#include "wittpolar/etale.hpp"
#include "wittpolar/serialize.hpp"
#include "wittpolar/wittmod.hpp"

using namespace wittpolar;

namespace {

Json nil4_doc() {
  return Json{{"field", {{"p", 2}}}, {"construct", "augmentation_ideal"}, {"N", 4}, {"p", 2}};
}

AlgebraPtr nil4() { return std::make_shared<const PPolarAlgebra>(any_algebra_from_json(nil4_doc())); }

}  // namespace

TEST(Serialize, PolyRoundTrip) {
  MultiPoly f = MultiPoly::variable(2, 0).pow(2).scaled(Rational(-3, 2)) + MultiPoly::variable(2, 1);
  std::vector<std::string> names{"a", "b"};
  Json j = poly_to_json(f, names);
  std::vector<std::string> back;
  EXPECT_EQ(poly_from_json(j, &back), f);
  EXPECT_EQ(back, names);
  EXPECT_EQ(j["terms"].size(), 2u);
}

TEST(Serialize, PolyRejectsBadTerms) {
  Json j{{"vars", {"a"}}, {"terms", {{{"exp", {1, 2}}, {"num", "1"}, {"den", "1"}}}}};
  EXPECT_THROW(poly_from_json(j), InvalidInput);
  Json z{{"vars", {"a"}}, {"terms", {{{"exp", {1}}, {"num", "1"}, {"den", "0"}}}}};
  EXPECT_THROW(poly_from_json(z), InvalidInput);
}

TEST(Serialize, FamilyRoundTrip) {
  auto f = universal_polys(3, 2, WittKind::sum);
  UniversalFamily g = family_from_json(family_to_json(*f));
  EXPECT_EQ(g.components, f->components);
  EXPECT_EQ(g.names, f->names);
  EXPECT_EQ(g.polar_mask, f->polar_mask);
  EXPECT_EQ(g.kind, WittKind::sum);
}

TEST(Serialize, FieldAndElements) {
  auto F = FqField::build(3, 2);
  Json j = field_to_json(*F);
  EXPECT_EQ(*field_from_json(j), *F);
  EXPECT_EQ(*field_from_json(Json{{"p", 3}, {"m", 2}}), *F);
  EXPECT_THROW(field_from_json(Json{{"p", 3}, {"m", 3}, {"modulus", {1, 0, 1}}}), InvalidInput);
  for (std::uint32_t v = 0; v < 9; ++v) EXPECT_EQ(element_from_json(*F, element_to_json(*F, Fq{v})), Fq{v});
  EXPECT_THROW(element_from_json(*F, Json(1)), InvalidInput);
  EXPECT_THROW(element_from_json(*F, Json{1, 3}), InvalidInput);
  auto F5 = FqField::build(5, 1);
  EXPECT_EQ(element_from_json(*F5, Json(-1)), Fq{4});
  EXPECT_EQ(element_to_json(*F5, Fq{4}), Json(4));
}

TEST(Serialize, AlgebraRoundTrip) {
  auto F = FqField::build(2, 2);
  PPolarAlgebra A = polarize(algebras::product(algebras::field_extension(F, 2), algebras::augmentation_ideal(F, 3)), 2);
  PPolarAlgebra B = algebra_from_json(algebra_to_json(A));
  EXPECT_EQ(B.structure(), A.structure());
  EXPECT_EQ(*B.field(), *A.field());
}

TEST(Serialize, AlgebraRejectsUnsortedKeys) {
  Json j{{"p", 2}, {"field", {{"p", 2}}}, {"dim", 2}, {"mu", {{{"idx", {1, 0}}, {"val", {1, 0}}}}}};
  EXPECT_THROW(algebra_from_json(j), InvalidInput);
}

TEST(Serialize, CommutativeConstructions) {
  EXPECT_EQ(commutative_from_json(nil4_doc()).dim, 3u);
  Json q{{"field", {{"p", 3}}}, {"construct", "quotient_ring"}, {"modulus", {0, 0, 1}}};
  EXPECT_EQ(commutative_from_json(q).dim, 2u);
  Json t{{"field", {{"p", 2}}}, {"dim", 1}, {"table", {{{1}}}}};
  PPolarAlgebra A = polarize(commutative_from_json(t), 2);
  EXPECT_EQ(A.structure().size(), 1u);
  EXPECT_THROW(commutative_from_json(Json{{"field", {{"p", 2}}}, {"construct", "torus"}}), InvalidInput);
  EXPECT_THROW(commutative_from_json(Json{{"field", {{"p", 2}}}, {"dim", 2}, {"table", {{{1}}}}}), InvalidInput);
}

TEST(Serialize, MissingFieldNamesTheKey) {
  try {
    json_field(Json::object(), "algebra");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("algebra"), std::string::npos);
  }
  EXPECT_THROW(json_uint(Json{{"n", -1}}, "n"), InvalidInput);
}

TEST(Serialize, Rationals) {
  EXPECT_EQ(rational_from_json(Json("-6/4")), Rational(-3, 2));
  EXPECT_EQ(rational_from_json(Json("7")), Rational(7));
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
  EXPECT_EQ(rational_to_json(Rational(-3, 2)), Json("-3/2"));
  EXPECT_THROW(rational_from_json(Json("1/0")), InvalidInput);
  EXPECT_THROW(rational_from_json(Json("x")), InvalidInput);
}

TEST(Serialize, WittRoundTrip) {
  auto A = nil4();
  WittVector x(A, {unit_vector(3, 0), unit_vector(3, 2)});
  EXPECT_EQ(witt_from_json(A, witt_to_json(x)), x);
  EXPECT_THROW(witt_from_json(A, Json{{"coords", {{1, 0}}}}), InvalidInput);
}

TEST(Serialize, CoWittRoundTrip) {
  auto A = nil4();
  CoWittElement x(A, unit_vector(3, 1), {{0, unit_vector(3, 0)}, {-3, unit_vector(3, 2)}}, {1, 1});
  Json j = cw_to_json(x);
  EXPECT_TRUE(j["exceptions"].contains("-3"));
  CoWittElement y = cw_from_json(A, j);
  EXPECT_EQ(y, x);
  EXPECT_EQ(y.witness(), x.witness());

  Json no_witness = j;
  no_witness.erase("witness");
  EXPECT_EQ(cw_from_json(A, no_witness), x);

  Json wrong = j;
  wrong["witness"] = {0, 0};
  EXPECT_THROW(cw_from_json(A, wrong), InvalidInput);
  EXPECT_NO_THROW(cw_parse_unchecked(A, wrong));
}

TEST(Serialize, CoWittRejectsInvalidElement) {
  auto F = FqField::build(2, 1);
  auto K = polarized_field(F, 2);
  Json j{{"tail", {1}}, {"exceptions", Json::object()}};
  EXPECT_THROW(cw_from_json(K, j), InvalidInput);
}

TEST(Serialize, DecompositionFields) {
  auto F2 = FqField::build(2, 1);
  Decomposition D = decompose(polarize(algebras::field_extension(F2, 2), 2));
  Json j = decomposition_to_json(D);
  EXPECT_EQ(j["factors"], 2);
  EXPECT_EQ(j["extension_degree"], 2);
  EXPECT_EQ(j["frobenius_permutation"], "(1 2)");
  EXPECT_EQ(j["idempotents"].size(), 2u);
  EXPECT_TRUE(j.contains("change_of_basis"));
}

TEST(Serialize, FormatTag) { EXPECT_EQ(with_format(Json::object())["format"], kFormatTag); }
