#include <string>

#include "wittpolar/cowitt.hpp"
#include "wittpolar/etale.hpp"
#include "wittpolar/serialize.hpp"

namespace wittpolar {

Rational rational_from_json(const Json& j) {
  Rational c;
  if (j.is_number_integer()) {
    c = Rational(j.get<long>());
  } else if (j.is_string()) {
    if (c.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("bad rational " + j.dump());
    if (c.get_den() == 0) throw InvalidInput("zero denominator in " + j.dump());
    c.canonicalize();
  } else {
    throw InvalidInput("expected a rational, got " + j.dump());
  }
  return c;
}

Json rational_to_json(const Rational& c) { return c.get_str(); }

Json witt_to_json(const WittVector& x) {
  const FqField& F = *x.algebra()->field();
  Json coords = Json::array();
  for (const auto& v : x.coords()) coords.push_back(vec_to_json(F, v));
  return Json{{"coords", coords}};
}

WittVector witt_from_json(const AlgebraPtr& A, const Json& j) {
  const Json& coords = json_field(j, "coords");
  if (!coords.is_array() || coords.empty()) throw InvalidInput("\"coords\" must be a nonempty array");
  std::vector<Vec> c;
  for (const auto& v : coords) c.push_back(vec_from_json(*A->field(), v, A->dim()));
  return WittVector(A, std::move(c));
}

Json cw_to_json(const CoWittElement& x) {
  const FqField& F = *x.algebra()->field();
  Json exc = Json::object();
  for (const auto& [i, v] : x.exceptions()) exc[std::to_string(i)] = vec_to_json(F, v);
  return Json{{"tail", vec_to_json(F, x.tail())},
              {"exceptions", exc},
              {"witness", {x.witness().first, x.witness().second}}};
}

CoWittElement cw_parse_unchecked(const AlgebraPtr& A, const Json& j) {
  const FqField& F = *A->field();
  Vec tail = vec_from_json(F, json_field(j, "tail"), A->dim());
  CoWittElement::Exceptions exc;
  if (j.contains("exceptions")) {
    const Json& e = j.at("exceptions");
    if (!e.is_object()) throw InvalidInput("\"exceptions\" must map indices to entries");
    for (const auto& [key, val] : e.items()) {
      long idx = 0;
      std::size_t used = 0;
      try {
        idx = std::stol(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || idx > 0) throw InvalidInput("exception index \"" + key + "\" must be an integer <= 0");
      exc.emplace(idx, vec_from_json(F, val, A->dim()));
    }
  }
  std::pair<unsigned, unsigned> w{0, 0};
  if (j.contains("witness")) {
    const Json& wj = j.at("witness");
    auto natural = [](const Json& v) { return v.is_number_integer() && v.get<std::int64_t>() >= 0; };
    if (!wj.is_array() || wj.size() != 2 || !natural(wj[0]) || !natural(wj[1]))
      throw InvalidInput("\"witness\" must be [r, s] with r, s >= 0");
    w = {wj[0].get<unsigned>(), wj[1].get<unsigned>()};
  }
  return CoWittElement(A, std::move(tail), std::move(exc), w);
}

CoWittElement cw_from_json(const AlgebraPtr& A, const Json& j) {
  CoWittElement x = cw_parse_unchecked(A, j);
  if (j.contains("witness")) {
    auto w = x.witness();
    if (!witness_holds(x, w))
      throw InvalidInput("witness [" + std::to_string(w.first) + ", " + std::to_string(w.second) + "] does not hold");
    return x;
  }
  Validation v = cw_validate(x);
  if (!v.valid) throw InvalidInput("not a co-Witt vector: the tail does not generate a nilpotent ideal");
  x.set_witness(*v.witness);
  return x;
}

Json decomposition_to_json(const Decomposition& D) {
  const FqField& G = *D.field;
  Json idem = Json::array();
  for (const auto& e : D.idempotents) idem.push_back(vec_to_json(G, e));
  return Json{{"factors", D.factor_count()},
              {"extension_degree", D.base_extension_degree},
              {"field", field_to_json(G)},
              {"reduced_dim", D.reduced_dim},
              {"idempotents", idem},
              {"frobenius_permutation", cycle_notation(D.frobenius_permutation)},
              {"change_of_basis", matrix_to_json(G, D.change_of_basis)}};
}

}  // namespace wittpolar
