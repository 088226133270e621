#include "wittpolar/serialize.hpp"

namespace wittpolar {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t require_uint(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw InvalidInput(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("bad integer string " + j.dump());
    return z;
  }
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw InvalidInput("expected an integer, got " + j.dump());
}

}  // namespace

Json with_format(Json j) {
  j["format"] = kFormatTag;
  return j;
}

Json poly_to_json(const MultiPoly& f, std::span<const std::string> names) {
  Json vars = Json::array();
  for (std::size_t i = 0; i < f.nvars(); ++i) vars.push_back(i < names.size() ? names[i] : "v" + std::to_string(i));
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return Json{{"vars", vars}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j, std::vector<std::string>* names) {
  const Json& vars = require(j, "vars");
  if (!vars.is_array()) throw InvalidInput("\"vars\" must be an array");
  MultiPoly f(vars.size());
  if (names) {
    names->clear();
    for (const auto& v : vars) names->push_back(v.get<std::string>());
  }
  for (const auto& t : require(j, "terms")) {
    auto e = require(t, "exp").get<Exponents>();
    if (e.size() != vars.size()) throw InvalidInput("term exponent has wrong length");
    Integer num = integer_from_json(require(t, "num"));
    Integer den = t.contains("den") ? integer_from_json(t.at("den")) : Integer(1);
    if (den == 0) throw InvalidInput("zero denominator");
    Rational c(num, den);
    c.canonicalize();
    f.add_term(e, c);
  }
  return f;
}

Json family_to_json(const UniversalFamily& f) {
  Json comps = Json::array();
  for (const auto& c : f.components) comps.push_back(poly_to_json(c, f.names));
  Json mask = Json::array();
  for (bool b : f.polar_mask) mask.push_back(b);
  return with_format(Json{{"p", f.p}, {"n", f.n}, {"kind", std::string(kind_name(f.kind))}, {"vars", f.names},
                          {"polar_mask", mask}, {"components", comps}});
}

UniversalFamily family_from_json(const Json& j) {
  auto kind = parse_kind(require(j, "kind").get<std::string>());
  if (!kind) throw InvalidInput("unknown polynomial kind");
  UniversalFamily f = family_layout(static_cast<unsigned>(require_uint(j, "p")), require_uint(j, "n"), *kind);
  for (const auto& c : require(j, "components")) {
    std::vector<std::string> names;
    f.components.push_back(poly_from_json(c, &names));
    if (names != f.names) throw InvalidInput("component variables do not match the family layout");
  }
  return f;
}

Json field_to_json(const FqField& F) {
  return Json{{"p", F.characteristic()}, {"m", F.degree()}, {"modulus", F.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
  auto p = static_cast<std::uint32_t>(require_uint(j, "p"));
  if (j.contains("modulus")) {
    auto mod = j.at("modulus").get<std::vector<std::uint32_t>>();
    if (j.contains("m") && j.at("m").get<std::uint64_t>() + 1 != mod.size()) {
      throw InvalidInput("modulus length does not match m");
    }
    return FqField::with_modulus(p, std::move(mod));
  }
  auto m = j.contains("m") ? static_cast<std::uint32_t>(require_uint(j, "m")) : 1U;
  return FqField::build(p, m);
}

Json element_to_json(const FqField& F, Fq a) {
  if (F.degree() == 1) return a.v;
  return F.coords(a);
}

Fq element_from_json(const FqField& F, const Json& j) {
  if (j.is_array()) {
    auto c = j.get<std::vector<std::uint32_t>>();
    if (c.size() != F.degree()) throw InvalidInput("element has wrong number of coordinates");
    for (auto x : c) {
      if (x >= F.characteristic()) throw InvalidInput("element coordinate out of range");
    }
    return F.from_coords(c);
  }
  if (j.is_number_integer()) {
    if (F.degree() != 1) throw InvalidInput("elements of a non-prime field are coordinate arrays");
    return F.from_int(j.get<std::int64_t>());
  }
  throw InvalidInput("bad field element " + j.dump());
}

Json vec_to_json(const FqField& F, std::span<const Fq> v) {
  Json out = Json::array();
  for (Fq a : v) out.push_back(element_to_json(F, a));
  return out;
}

Vec vec_from_json(const FqField& F, const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw InvalidInput("expected a vector of length " + std::to_string(dim) + ", got " + j.dump());
  }
  Vec v;
  for (const auto& a : j) v.push_back(element_from_json(F, a));
  return v;
}

Json matrix_to_json(const FqField& F, const FqMatrix& M) {
  Json out = Json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) out.push_back(vec_to_json(F, M.row(r)));
  return out;
}

Json algebra_to_json(const PPolarAlgebra& A) {
  const FqField& F = *A.field();
  Json mu = Json::array();
  for (const auto& [key, val] : A.structure()) mu.push_back({{"idx", key}, {"val", vec_to_json(F, val)}});
  return Json{{"p", A.p()}, {"field", field_to_json(F)}, {"dim", A.dim()}, {"mu", mu}};
}

PPolarAlgebra algebra_from_json(const Json& j) {
  auto p = static_cast<unsigned>(require_uint(j, "p"));
  FieldPtr F = field_from_json(require(j, "field"));
  auto dim = require_uint(j, "dim");
  std::map<PPolarAlgebra::Key, Vec> mu;
  for (const auto& entry : require(j, "mu")) {
    auto key = require(entry, "idx").get<PPolarAlgebra::Key>();
    Vec val = vec_from_json(*F, require(entry, "val"), dim);
    if (!mu.emplace(key, std::move(val)).second) throw InvalidInput("duplicate structure key");
  }
  return PPolarAlgebra(F, p, dim, std::move(mu));
}

CommutativeAlgebra commutative_from_json(const Json& j) {
  FieldPtr F = field_from_json(require(j, "field"));
  if (j.contains("construct")) {
    auto name = j.at("construct").get<std::string>();
    if (name == "augmentation_ideal") return algebras::augmentation_ideal(F, require_uint(j, "N"));
    if (name == "quotient_ring") {
      const Json& mod = require(j, "modulus");
      return algebras::quotient_ring(F, vec_from_json(*F, mod, mod.size()));
    }
    if (name == "field_extension") return algebras::field_extension(F, require_uint(j, "k"));
    if (name == "split") return algebras::split(F, require_uint(j, "n"));
    throw InvalidInput("unknown construction \"" + name + "\"");
  }
  auto dim = require_uint(j, "dim");
  const Json& table = require(j, "table");
  if (!table.is_array() || table.size() != dim) throw InvalidInput("table must have dim rows");
  CommutativeAlgebra R{F, dim, std::vector<Vec>(dim * dim)};
  for (std::size_t i = 0; i < dim; ++i) {
    if (!table[i].is_array() || table[i].size() != dim) throw InvalidInput("table must be dim x dim");
    for (std::size_t k = 0; k < dim; ++k) R.table[i * dim + k] = vec_from_json(*F, table[i][k], dim);
  }
  return R;
}

PPolarAlgebra any_algebra_from_json(const Json& j) {
  if (j.contains("mu")) return algebra_from_json(j);
  auto p = static_cast<unsigned>(require_uint(j, "p"));
  return polarize(commutative_from_json(j), p);
}

const Json& json_field(const Json& j, const char* key) { return require(j, key); }
std::uint64_t json_uint(const Json& j, const char* key) { return require_uint(j, key); }

}  // namespace wittpolar
