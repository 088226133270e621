#include "wittpolar/etale.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace wittpolar {

namespace {

FqMatrix scalar_matrix(Fq a) {
  FqMatrix M(1, 1);
  M.at(0, 0) = a;
  return M;
}

// Nonzero roots in G of sum_{i<j} a_i^{p^{j-i-1}} x^{p^{j-i}} - x, with the
// a_i pushed through emb. At most `limit` roots, in a fixed order.
std::vector<Fq> nonzero_roots(const FieldEmbedding& emb, std::size_t j, const std::vector<Fq>& alpha,
                              std::size_t limit = 256) {
  const FqField& G = *emb.target();
  std::vector<SemilinearTerm> terms;
  for (std::size_t i = 0; i < j; ++i) {
    Fq c = G.frobenius(emb(alpha[i]), static_cast<std::int64_t>(j - i - 1));
    if (c.v != 0) terms.push_back({static_cast<std::int64_t>(j - i), scalar_matrix(c)});
  }
  terms.push_back({0, scalar_matrix(G.neg(G.one()))});
  std::vector<Vec> basis = additive_map_kernel(G, terms, 1);
  std::vector<Fq> roots;
  const std::uint32_t p = G.characteristic();
  std::vector<std::uint32_t> digits(basis.size(), 0);
  while (roots.size() < limit) {
    std::size_t pos = 0;
    while (pos < digits.size() && digits[pos] == p - 1) digits[pos++] = 0;
    if (pos == digits.size()) break;
    ++digits[pos];
    Fq r = G.zero();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (digits[k] != 0) r = G.add(r, G.mul(G.from_int(digits[k]), basis[k][0]));
    }
    roots.push_back(r);
  }
  return roots;
}

// The idempotent of the construction for one root beta; coordinates over G.
Vec idempotent_from(const PPolarAlgebra& C, const Vec& y, std::size_t j, const std::vector<Fq>& alpha,
                    Fq beta, const FieldEmbedding& emb) {
  const FqField& G = *emb.target();
  std::vector<Vec> powers{y};
  for (std::size_t l = 1; l < j; ++l) powers.push_back(p_power(C, powers.back()));
  const Fq beta_p = G.frobenius(beta, 1);
  Vec e = vec_zero(C.dim());
  for (std::size_t l = 0; l < j; ++l) {
    Fq coef = G.zero();
    for (std::size_t i = 0; i <= l; ++i) {
      Fq base = G.mul(emb(alpha[i]), beta_p);
      coef = G.add(coef, G.frobenius(base, static_cast<std::int64_t>(l - i)));
    }
    vec_axpy(G, coef, emb(powers[l]), e);
  }
  return e;
}

FieldEmbedding extension_by(const FieldPtr& F, unsigned t) {
  if (t == 1) return FieldEmbedding::identity(F);
  return FieldEmbedding(F, FqField::build(F->characteristic(), F->degree() * t));
}

FqMatrix mult_by_power(const PPolarAlgebra& C, const Vec& e) {
  std::vector<Vec> columns;
  std::vector<Vec> args(C.p() - 1, e);
  args.push_back(Vec{});
  for (std::size_t i = 0; i < C.dim(); ++i) {
    args.back() = unit_vector(C.dim(), i);
    columns.push_back(C.mu(args));
  }
  return FqMatrix::from_columns(columns, C.dim());
}

void check_idempotent(const PPolarAlgebra& CG, const Vec& e) {
  if (vec_is_zero(e)) throw InternalInvariant("idempotent construction produced zero");
  if (p_power(CG, e) != e) throw InternalInvariant("idempotent construction produced e with e^p != e");
}

std::vector<Vec> candidates(const PPolarAlgebra& C, std::mt19937_64& rng) {
  const FqField& F = *C.field();
  const std::size_t k = C.dim();
  std::vector<Vec> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(unit_vector(k, i));
  const std::uint64_t scalars = std::min<std::uint64_t>(F.size() - 1, 6);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::uint64_t c = 1; c <= scalars; ++c) {
        Vec v = unit_vector(k, i);
        v[j] = Fq{static_cast<std::uint32_t>(c)};
        out.push_back(std::move(v));
      }
    }
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, F.size() - 1);
  for (int r = 0; r < 16; ++r) {
    Vec v(k);
    for (auto& a : v) a = Fq{static_cast<std::uint32_t>(dist(rng))};
    if (!vec_is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

struct FoundSplit {
  FieldEmbedding emb;
  Vec e;  // in C tensor G
};

// Searches extensions of increasing degree for an idempotent of C that is a
// proper split (dim C >= 2) or any nonzero idempotent (dim C = 1).
FoundSplit search_split(const PPolarAlgebra& C, std::mt19937_64& rng) {
  const std::size_t k = C.dim();
  const FieldPtr& F = C.field();
  std::uint64_t cap = 1;
  for (std::size_t i = 0; i < k && cap < 64; ++i) cap *= C.p();
  std::vector<Vec> ys = candidates(C, rng);
  for (unsigned t = 1; t <= cap; ++t) {
    FieldEmbedding emb = extension_by(F, t);
    PPolarAlgebra CG = extend_scalars(C, emb);
    for (const auto& y : ys) {
      auto [j, alpha] = power_relation(C, y);
      for (Fq beta : nonzero_roots(emb, j, alpha)) {
        Vec e = idempotent_from(C, y, j, alpha, beta, emb);
        check_idempotent(CG, e);
        if (k == 1) return FoundSplit{emb, std::move(e)};
        std::size_t rk = rank(*CG.field(), mult_by_power(CG, e));
        if (rk > 0 && rk < k) return FoundSplit{emb, std::move(e)};
      }
    }
  }
  throw ExtensionCapExceeded("no splitting idempotent found within extension degree " + std::to_string(cap));
}

std::vector<Vec> combine(const FqField& F, std::span<const Vec> coeffs, std::span<const Vec> basis, std::size_t ambient) {
  std::vector<Vec> out;
  for (const auto& c : coeffs) {
    Vec v = vec_zero(ambient);
    for (std::size_t i = 0; i < c.size(); ++i) vec_axpy(F, c[i], basis[i], v);
    out.push_back(std::move(v));
  }
  return out;
}

// Idempotents are only defined up to F_p^x (zeta^p = zeta); pick the least
// multiple as the representative of the line.
Vec normalize_line(const FqField& G, const Vec& e) {
  Vec best = e;
  for (std::uint32_t z = 2; z < G.characteristic(); ++z) {
    Vec c = vec_scale(G, Fq{z}, e);
    if (c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

std::pair<std::size_t, std::vector<Fq>> power_relation(const PPolarAlgebra& A, const Vec& y) {
  if (vec_is_zero(y)) throw InvalidInput("power relation of the zero vector");
  std::vector<Vec> powers{y};
  while (true) {
    Vec next = p_power(A, powers.back());
    if (auto c = solve_in_span(*A.field(), powers, next)) return {powers.size(), *c};
    if (powers.size() > A.dim()) throw InternalInvariant("power sequence exceeded the dimension");
    powers.push_back(std::move(next));
  }
}

IdempotentResult find_idempotent(const PPolarAlgebra& A, const Vec& y, std::size_t beta_choice) {
  if (nilradical(A).dim() != 0) throw NotReduced("algebra has a nonzero nilradical");
  auto [j, alpha] = power_relation(A, y);
  std::uint64_t cap = 1;
  for (std::size_t i = 0; i < j; ++i) cap *= A.p();
  for (unsigned t = 1; t <= cap; ++t) {
    FieldEmbedding emb = extension_by(A.field(), t);
    auto roots = nonzero_roots(emb, j, alpha);
    if (roots.empty()) continue;
    Fq beta = roots[std::min(beta_choice, roots.size() - 1)];
    Vec e = idempotent_from(A, y, j, alpha, beta, emb);
    check_idempotent(extend_scalars(A, emb), e);
    return IdempotentResult{std::move(e), emb, t, j, alpha, beta};
  }
  throw ExtensionCapExceeded("additive polynomial has no nonzero root within degree " + std::to_string(cap));
}

IdempotentResult find_idempotent(const PPolarAlgebra& A) {
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Vec y = unit_vector(A.dim(), i);
    if (!vec_is_zero(p_power(A, y))) return find_idempotent(A, y);
  }
  if (A.dim() == 0) throw InvalidInput("the zero algebra has no nonzero idempotent");
  return find_idempotent(A, unit_vector(A.dim(), 0));
}

SplitResult split_once(const PPolarAlgebra& A, const Vec& e) {
  const FqField& F = *A.field();
  if (vec_is_zero(e) || p_power(A, e) != e) throw InvalidInput("split_once needs a nonzero e with e^p = e");
  FqMatrix f = mult_by_power(A, e);
  if (f.mul(F, f) != f) throw InternalInvariant("multiplication by e^{p-1} is not idempotent");
  std::vector<Vec> ker = linear_kernel(F, f);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < A.dim(); ++i) cols.push_back(f.column(i));
  std::vector<Vec> im = row_echelon(F, cols);
  PPolarAlgebra kp = induced_algebra(A, ker);
  PPolarAlgebra ip = induced_algebra(A, im);
  if (!check_assoc(kp).ok || !check_assoc(ip).ok) throw InternalInvariant("split factor violates (ASSOC)");
  return SplitResult{std::move(ker), std::move(im), std::move(kp), std::move(ip), std::move(f)};
}

Decomposition decompose(const PPolarAlgebra& A) {
  const FieldPtr base = A.field();
  Quotient Q = quotient(A, nilradical(A));
  Decomposition D;
  D.reduction = Q.projection;
  D.reduced = Q.algebra;
  D.reduced_dim = Q.algebra->dim();
  const std::size_t r = D.reduced_dim;

  FieldEmbedding total = FieldEmbedding::identity(base);
  AlgebraPtr B = Q.algebra;
  std::vector<std::vector<Vec>> pieces;
  if (r > 0) {
    std::vector<Vec> whole;
    for (std::size_t i = 0; i < r; ++i) whole.push_back(unit_vector(r, i));
    pieces.push_back(std::move(whole));
  }
  std::vector<Vec> done;
  std::mt19937_64 rng(0x5eed);
  while (!pieces.empty()) {
    std::vector<Vec> piece = std::move(pieces.back());
    pieces.pop_back();
    PPolarAlgebra C = induced_algebra(*B, piece);
    FoundSplit found = search_split(C, rng);
    if (found.emb.target() != found.emb.source()) {
      const FieldEmbedding& emb = found.emb;
      B = std::make_shared<const PPolarAlgebra>(extend_scalars(*B, emb));
      for (auto& pc : pieces) {
        for (auto& v : pc) v = emb(v);
      }
      for (auto& v : piece) v = emb(v);
      for (auto& v : done) v = emb(v);
      total = total.then(emb);
      C = extend_scalars(C, emb);
    }
    const FqField& G = *B->field();
    if (piece.size() == 1) {
      done.push_back(vec_scale(G, found.e[0], piece[0]));
      continue;
    }
    SplitResult s = split_once(C, found.e);
    pieces.push_back(combine(G, s.ker_basis, piece, r));
    pieces.push_back(combine(G, s.im_basis, piece, r));
  }

  D.field = total.target();
  D.base_extension_degree = D.field->degree() / base->degree();
  const FqField& G = *D.field;
  for (auto& e : done) e = normalize_line(G, e);
  std::sort(done.begin(), done.end());
  D.idempotents = done;
  for (const auto& e : done) {
    Vec img = normalize_line(G, vec_frobenius(G, e, static_cast<std::int64_t>(base->degree())));
    auto it = std::find(done.begin(), done.end(), img);
    if (it == done.end()) throw InternalInvariant("Frobenius does not permute the factor idempotents");
    D.frobenius_permutation.push_back(static_cast<std::size_t>(it - done.begin()));
  }
  D.change_of_basis = FqMatrix::from_rows(done, r);
  if (rank(G, D.change_of_basis) != r) throw InternalInvariant("decomposition is incomplete");
  if (r > 0) {
    PPolarAlgebra split_alg = polarize(algebras::split(D.field, r), A.p());
    std::vector<Vec> cols(done.begin(), done.end());
    if (!is_morphism(split_alg, *B, FqMatrix::from_columns(cols, r))) {
      throw InternalInvariant("factor idempotents do not split the reduced algebra");
    }
  }
  return D;
}

std::vector<std::vector<std::size_t>> permutation_cycles(const std::vector<std::size_t>& perm) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t k = i; !seen[k]; k = perm[k]) {
      seen[k] = true;
      cyc.push_back(k);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::ostringstream out;
  for (const auto& cyc : permutation_cycles(perm)) {
    out << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) out << (k ? " " : "") << cyc[k] + 1;
    out << ')';
  }
  return out.str();
}

GeometricPoints geometric_points(const PPolarAlgebra& A) {
  Decomposition D = decompose(A);
  return GeometricPoints{D.factor_count(), permutation_cycles(D.frobenius_permutation)};
}

bool hom_check(const FqField& F, std::span<const Fq> row) {
  std::size_t nonzero = 0;
  for (Fq a : row) {
    if (a.v == 0) continue;
    if (++nonzero > 1) return false;
    if (!F.in_prime_field(a) || F.pow(a, F.characteristic()) != a) return false;
  }
  return true;
}

PhiMatrix phi_matrix(const FqField& F, const FqMatrix& M) {
  PhiMatrix out;
  for (std::size_t r = 0; r < M.rows(); ++r) {
    Vec row = M.row(r);
    if (!hom_check(F, row)) throw NotAMorphism("row " + std::to_string(r) + " is not a homomorphism");
    std::vector<int> bits;
    for (Fq a : row) bits.push_back(a.v != 0 ? 1 : 0);
    out.push_back(std::move(bits));
  }
  return out;
}

PhiMatrix phi_multiply(const PhiMatrix& a, const PhiMatrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw InvalidInput("Phi matrices are not composable");
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  PhiMatrix out(a.size(), std::vector<int>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace wittpolar
