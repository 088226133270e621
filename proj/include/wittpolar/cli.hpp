#pragma once

#include <ostream>

#include "wittpolar/serialize.hpp"

namespace wittpolar::cli {

// Exit codes: 0 success, 1 invalid input (JSON diagnostic on err), 2 internal
// invariant violation, 3 a verify check failed.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// witt-eval document: {"algebra": ..., "expr": node}. A node is a literal
// {"coords": [...]}, {"teichmuller": v, "n": k}, or {"op": name, "args": [...]}
// with op one of add, sub, neg, mul, F, V, truncate (with "n"), multiple
// (with "k") and scalar (with "a": scalar coords).
Json eval_witt_document(const Json& doc);

// cw document: {"algebra": ..., "op": add | multiple | F | V | validate,
// "x": ..., "y": ..., "k": ..., "options": {"repeats": r, "cap": c}}.
Json eval_cw_document(const Json& doc);

}  // namespace wittpolar::cli
