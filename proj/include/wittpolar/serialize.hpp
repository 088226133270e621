#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "wittpolar/exact.hpp"
#include "wittpolar/gfq.hpp"
#include "wittpolar/ppolar.hpp"
#include "wittpolar/wittuniv.hpp"

namespace wittpolar {
class WittVector;
class CoWittElement;
struct Decomposition;
}  // namespace wittpolar

namespace wittpolar {

using Json = nlohmann::json;

inline constexpr const char* kFormatTag = "wittpolar/1";

// {"vars": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}
Json poly_to_json(const MultiPoly& f, std::span<const std::string> names);
MultiPoly poly_from_json(const Json& j, std::vector<std::string>* names = nullptr);

Json family_to_json(const UniversalFamily& f);
UniversalFamily family_from_json(const Json& j);

// {"p": 2, "m": 2, "modulus": [1, 1, 1]}
Json field_to_json(const FqField& F);
FieldPtr field_from_json(const Json& j);

// An element is an integer when m = 1 and a coordinate array otherwise.
Json element_to_json(const FqField& F, Fq a);
Fq element_from_json(const FqField& F, const Json& j);
Json vec_to_json(const FqField& F, std::span<const Fq> v);
Vec vec_from_json(const FqField& F, const Json& j, std::size_t dim);
Json matrix_to_json(const FqField& F, const FqMatrix& M);

// {"p": 3, "field": {...}, "dim": 2, "mu": [{"idx": [...], "val": [...]}, ...]}
Json algebra_to_json(const PPolarAlgebra& A);
PPolarAlgebra algebra_from_json(const Json& j);

// Commutative algebra input for polarization. Either an explicit table,
// {"field": ..., "dim": d, "table": [[v_00, v_01, ...], ...]}, or a named
// construction {"field": ..., "construct": "augmentation_ideal", "N": 4};
// other constructions are quotient_ring (modulus), field_extension (k) and
// split (n).
CommutativeAlgebra commutative_from_json(const Json& j);

// Accepts either a p-polar algebra or a commutative algebra plus "p"
// (which is then polarized).
PPolarAlgebra any_algebra_from_json(const Json& j);

Json with_format(Json j);

// Field lookups raising InvalidInput with the field name.
const Json& json_field(const Json& j, const char* key);
std::uint64_t json_uint(const Json& j, const char* key);
// Rational from "a/b", "a", or an integer.
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& c);

// {"coords": [[...], ...]}; the algebra travels separately.
Json witt_to_json(const WittVector& x);
WittVector witt_from_json(const AlgebraPtr& A, const Json& j);

// {"tail": [...], "exceptions": {"0": [...], "-3": [...]}, "witness": [r, s]}
Json cw_to_json(const CoWittElement& x);
// A missing witness is searched for; a supplied one must hold.
CoWittElement cw_from_json(const AlgebraPtr& A, const Json& j);
// Entries only; the witness is taken as given (or (0, 0)) and not checked.
CoWittElement cw_parse_unchecked(const AlgebraPtr& A, const Json& j);

Json decomposition_to_json(const Decomposition& D);

}  // namespace wittpolar
