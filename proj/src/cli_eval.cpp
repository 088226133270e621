#include "wittpolar/cli.hpp"
#include "wittpolar/cowitt.hpp"
#include "wittpolar/wittmod.hpp"

namespace wittpolar::cli {

namespace {

constexpr int kMaxDepth = 256;

AlgebraPtr document_algebra(const Json& doc) {
  return std::make_shared<const PPolarAlgebra>(any_algebra_from_json(json_field(doc, "algebra")));
}

WittVector eval_node(const AlgebraPtr& A, const Json& node, int depth) {
  if (depth > kMaxDepth) throw InvalidInput("expression nested too deeply");
  if (!node.is_object()) throw InvalidInput("expression node must be an object, got " + node.dump());
  if (node.contains("coords")) return witt_from_json(A, node);
  if (node.contains("teichmuller")) {
    Vec a = vec_from_json(*A->field(), node.at("teichmuller"), A->dim());
    return teichmuller(A, a, json_uint(node, "n"));
  }
  const std::string op = json_field(node, "op").get<std::string>();
  std::vector<WittVector> args;
  if (node.contains("args")) {
    if (!node.at("args").is_array()) throw InvalidInput("\"args\" must be an array");
    for (const auto& a : node.at("args")) args.push_back(eval_node(A, a, depth + 1));
  }
  auto arity = [&](std::size_t k) {
    if (args.size() != k)
      throw InvalidInput("op \"" + op + "\" takes " + std::to_string(k) + " argument(s), got " +
                         std::to_string(args.size()));
  };
  if (op == "add") {
    arity(2);
    return w_add(args[0], args[1]);
  }
  if (op == "sub") {
    arity(2);
    return w_sub(args[0], args[1]);
  }
  if (op == "neg") {
    arity(1);
    return w_neg(args[0]);
  }
  if (op == "mul") return w_product(args);
  if (op == "F") {
    arity(1);
    return frobenius_charp(args[0]);
  }
  if (op == "V") {
    arity(1);
    return verschiebung(args[0]);
  }
  if (op == "truncate") {
    arity(1);
    return truncate(args[0], json_uint(node, "n"));
  }
  if (op == "multiple") {
    arity(1);
    const Json& k = json_field(node, "k");
    if (!k.is_number_integer()) throw InvalidInput("\"k\" must be an integer");
    return w_multiple(k.get<long>(), args[0]);
  }
  if (op == "scalar") {
    arity(1);
    AlgebraPtr S = polarized_field(A->field(), A->p());
    return scalar_mul(witt_from_json(S, json_field(node, "a")), args[0]);
  }
  throw InvalidInput("unknown op \"" + op + "\"");
}

CwAddOptions add_options(const Json& doc) {
  CwAddOptions o;
  if (doc.contains("options")) {
    const Json& j = doc.at("options");
    if (j.contains("repeats")) o.repeats = static_cast<unsigned>(json_uint(j, "repeats"));
    if (j.contains("cap")) o.cap = static_cast<unsigned>(json_uint(j, "cap"));
  }
  return o;
}

}  // namespace

Json eval_witt_document(const Json& doc) {
  AlgebraPtr A = document_algebra(doc);
  WittVector r = eval_node(A, json_field(doc, "expr"), 0);
  return with_format(Json{{"result", witt_to_json(r)}});
}

Json eval_cw_document(const Json& doc) {
  AlgebraPtr A = document_algebra(doc);
  const std::string op = json_field(doc, "op").get<std::string>();
  if (op == "validate") {
    CoWittElement x = cw_parse_unchecked(A, json_field(doc, "x"));
    Validation v = cw_validate(x);
    Json out{{"valid", v.valid}};
    if (v.witness) out["witness"] = {v.witness->first, v.witness->second};
    return with_format(out);
  }
  CoWittElement x = cw_from_json(A, json_field(doc, "x"));
  CoWittElement r = [&] {
    if (op == "add") return cw_add(x, cw_from_json(A, json_field(doc, "y")), add_options(doc));
    if (op == "multiple") return cw_multiple(static_cast<unsigned>(json_uint(doc, "k")), x, add_options(doc));
    if (op == "F") return cw_F(x);
    if (op == "V") return cw_V(x);
    throw InvalidInput("unknown cw op \"" + op + "\"");
  }();
  return with_format(Json{{"result", cw_to_json(r)}});
}

}  // namespace wittpolar::cli
