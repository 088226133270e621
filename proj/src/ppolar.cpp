#include "wittpolar/ppolar.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace wittpolar {

namespace {

// Calls fn on every nondecreasing sequence of length k over [0, n).
void for_each_multiset(std::size_t n, std::size_t k,
                       const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (n == 0 && k > 0) return;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    fn(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[pos - 1];
  }
}

bool admissible_length(std::size_t n, unsigned p) { return n >= 1 && (n - 1) % (p - 1) == 0; }

}  // namespace

Vec CommutativeAlgebra::mul(std::span<const Fq> a, std::span<const Fq> b) const {
  const FqField& F = *field;
  Vec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].v == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].v == 0) continue;
      vec_axpy(F, F.mul(a[i], b[j]), table[i * dim + j], out);
    }
  }
  return out;
}

bool CommutativeAlgebra::is_symmetric() const {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (table[i * dim + j] != table[j * dim + i]) return false;
    }
  }
  return true;
}

bool CommutativeAlgebra::is_associative() const {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        Vec lhs = mul(table[i * dim + j], unit_vector(dim, k));
        Vec rhs = mul(unit_vector(dim, i), table[j * dim + k]);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

std::optional<Vec> CommutativeAlgebra::unity() const {
  // Solve sum_i u_i (e_i e_j) = e_j for all j.
  std::vector<Vec> columns(dim, Vec(dim * dim));
  Vec target(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) columns[i][j * dim + k] = table[i * dim + j][k];
    }
  }
  for (std::size_t j = 0; j < dim; ++j) target[j * dim + j] = field->one();
  return solve_in_span(*field, columns, target);
}

namespace algebras {

CommutativeAlgebra augmentation_ideal(FieldPtr field, std::size_t N) {
  if (N < 1) throw InvalidInput("augmentation ideal needs N >= 1");
  CommutativeAlgebra R{std::move(field), N - 1, {}};
  R.table.assign(R.dim * R.dim, vec_zero(R.dim));
  for (std::size_t i = 0; i < R.dim; ++i) {
    for (std::size_t j = 0; j < R.dim; ++j) {
      // x^{i+1} x^{j+1} = x^{i+j+2}, stored at index i+j+1.
      if (i + j + 1 < R.dim) R.table[i * R.dim + j][i + j + 1] = R.field->one();
    }
  }
  return R;
}

CommutativeAlgebra quotient_ring(FieldPtr field, const Vec& monic) {
  const FqField& F = *field;
  if (monic.size() < 2 || monic.back() != F.one()) throw InvalidInput("quotient_ring needs a monic polynomial");
  const std::size_t n = monic.size() - 1;
  auto reduce = [&](Vec a) {
    for (std::size_t top = a.size(); top-- > n;) {
      Fq c = a[top];
      if (c.v == 0) continue;
      for (std::size_t i = 0; i <= n; ++i) {
        a[top - n + i] = F.sub(a[top - n + i], F.mul(c, monic[i]));
      }
    }
    a.resize(n);
    return a;
  };
  CommutativeAlgebra R{std::move(field), n, {}};
  R.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod(2 * n, Fq{0});
      prod[i + j] = F.one();
      R.table[i * n + j] = reduce(prod);
    }
  }
  return R;
}

Vec irreducible_over(const FqField& F, std::size_t k) {
  if (k == 0) throw InvalidInput("degree must be positive");
  const std::uint64_t q = F.size();
  if (k == 1) return Vec{Fq{0}, F.one()};
  if (k > 3 && F.degree() != 1) throw InvalidInput("irreducible_over supports k <= 3 over non-prime fields");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= q;
  for (std::uint64_t n = 0; n < count; ++n) {
    Vec f(k + 1);
    std::uint64_t t = n;
    for (std::size_t i = 0; i < k; ++i) {
      f[i] = Fq{static_cast<std::uint32_t>(t % q)};
      t /= q;
    }
    f[k] = F.one();
    if (f[0].v == 0) continue;
    bool irreducible = true;
    if (k <= 3) {
      for (std::uint64_t x = 0; x < q && irreducible; ++x) {
        Fq val{0};
        for (std::size_t i = k + 1; i-- > 0;) val = F.add(F.mul(val, Fq{static_cast<std::uint32_t>(x)}), f[i]);
        if (val.v == 0) irreducible = false;
      }
    } else {
      std::vector<std::uint32_t> c(k + 1);
      for (std::size_t i = 0; i <= k; ++i) c[i] = f[i].v;
      irreducible = is_irreducible(F.characteristic(), c);
    }
    if (irreducible) return f;
  }
  throw InternalInvariant("no irreducible polynomial of degree " + std::to_string(k));
}

CommutativeAlgebra field_extension(FieldPtr field, std::size_t k) {
  Vec f = irreducible_over(*field, k);
  return quotient_ring(std::move(field), f);
}

CommutativeAlgebra split(FieldPtr field, std::size_t n) {
  CommutativeAlgebra R{std::move(field), n, {}};
  R.table.assign(n * n, vec_zero(n));
  for (std::size_t i = 0; i < n; ++i) R.table[i * n + i][i] = R.field->one();
  return R;
}

CommutativeAlgebra product(const CommutativeAlgebra& a, const CommutativeAlgebra& b) {
  if (!(*a.field == *b.field)) throw InvalidInput("product of algebras over different fields");
  const std::size_t n = a.dim + b.dim;
  CommutativeAlgebra R{a.field, n, {}};
  R.table.assign(n * n, vec_zero(n));
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      std::copy(a.table[i * a.dim + j].begin(), a.table[i * a.dim + j].end(), R.table[i * n + j].begin());
    }
  }
  for (std::size_t i = 0; i < b.dim; ++i) {
    for (std::size_t j = 0; j < b.dim; ++j) {
      const Vec& src = b.table[i * b.dim + j];
      std::copy(src.begin(), src.end(), R.table[(a.dim + i) * n + a.dim + j].begin() + a.dim);
    }
  }
  return R;
}

CommutativeAlgebra change_basis(const CommutativeAlgebra& R, const FqMatrix& P) {
  const FqField& F = *R.field;
  if (P.rows() != R.dim || P.cols() != R.dim || rank(F, P) != R.dim) {
    throw InvalidInput("change of basis must be invertible");
  }
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < R.dim; ++i) rows.push_back(P.row(i));
  CommutativeAlgebra out{R.field, R.dim, {}};
  out.table.resize(R.dim * R.dim);
  for (std::size_t i = 0; i < R.dim; ++i) {
    for (std::size_t j = 0; j < R.dim; ++j) {
      out.table[i * R.dim + j] = *solve_in_span(F, rows, R.mul(rows[i], rows[j]));
    }
  }
  return out;
}

}  // namespace algebras

PPolarAlgebra::PPolarAlgebra(FieldPtr field, unsigned p, std::size_t dim, std::map<Key, Vec> mu)
    : field_(std::move(field)), p_(p), dim_(dim) {
  if (!field_) throw InvalidInput("p-polar algebra needs a field");
  if (p < 2 || !is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (field_->characteristic() != p) {
    throw InvalidInput("p-polar algebras here live over fields of characteristic p");
  }
  std::size_t tuples = 1;
  for (unsigned i = 0; i < p; ++i) tuples *= dim;
  dense_.assign(tuples * dim, Fq{0});
  for (auto& [key, val] : mu) {
    if (key.size() != p || !std::is_sorted(key.begin(), key.end())) {
      throw InvalidInput("structure keys must be sorted multisets of size p");
    }
    if (!key.empty() && key.back() >= dim) throw InvalidInput("structure key index out of range");
    if (val.size() != dim) throw InvalidInput("structure value has wrong dimension");
    for (Fq x : val) {
      if (x.v >= field_->size()) throw InvalidInput("structure value is not a field element");
    }
    if (vec_is_zero(val)) continue;
    Key perm = key;
    do {
      std::copy(val.begin(), val.end(), dense_.begin() + static_cast<std::ptrdiff_t>(flat_index(perm) * dim));
    } while (std::next_permutation(perm.begin(), perm.end()));
    mu_.emplace(key, val);
  }
}

std::size_t PPolarAlgebra::flat_index(std::span<const std::size_t> indices) const {
  std::size_t flat = 0;
  for (std::size_t k = indices.size(); k-- > 0;) flat = flat * dim_ + indices[k];
  return flat;
}

Vec PPolarAlgebra::mu_basis(std::span<const std::size_t> indices) const {
  if (indices.size() != p_) throw LengthNotAdmissible(indices.size(), p_);
  std::size_t base = flat_index(indices) * dim_;
  return Vec(dense_.begin() + static_cast<std::ptrdiff_t>(base),
             dense_.begin() + static_cast<std::ptrdiff_t>(base + dim_));
}

Vec PPolarAlgebra::mu(std::span<const Vec> args) const {
  if (args.size() != p_) throw LengthNotAdmissible(args.size(), p_);
  const FqField& F = *field_;
  Vec out(dim_);
  if (mu_.empty()) return out;
  std::vector<std::vector<std::pair<std::size_t, Fq>>> nz(p_);
  for (unsigned k = 0; k < p_; ++k) {
    if (args[k].size() != dim_) throw InvalidInput("argument has wrong dimension");
    for (std::size_t i = 0; i < dim_; ++i) {
      if (args[k][i].v != 0) nz[k].emplace_back(i, args[k][i]);
    }
    if (nz[k].empty()) return out;
  }
  std::vector<std::size_t> stride(p_, 1);
  for (unsigned k = 1; k < p_; ++k) stride[k] = stride[k - 1] * dim_;
  std::function<void(unsigned, std::size_t, Fq)> rec = [&](unsigned k, std::size_t flat, Fq coef) {
    if (k == p_) {
      const Fq* v = dense_.data() + flat * dim_;
      for (std::size_t i = 0; i < dim_; ++i) {
        if (v[i].v != 0) out[i] = F.add(out[i], F.mul(coef, v[i]));
      }
      return;
    }
    for (const auto& [i, c] : nz[k]) rec(k + 1, flat + i * stride[k], F.mul(coef, c));
  };
  rec(0, 0, F.one());
  return out;
}

PPolarAlgebra polarize(const CommutativeAlgebra& R, unsigned p) {
  if (!R.is_symmetric()) throw InvalidInput("multiplication table is not symmetric");
  if (!R.is_associative()) throw InvalidInput("multiplication table is not associative");
  std::map<PPolarAlgebra::Key, Vec> mu;
  for_each_multiset(R.dim, p, [&](const std::vector<std::size_t>& key) {
    Vec acc = unit_vector(R.dim, key[0]);
    for (std::size_t k = 1; k < key.size(); ++k) acc = R.mul(acc, unit_vector(R.dim, key[k]));
    mu.emplace(key, std::move(acc));
  });
  return PPolarAlgebra(R.field, p, R.dim, std::move(mu));
}

PPolarAlgebra trivial_algebra(FieldPtr field, unsigned p, std::size_t dim) {
  return PPolarAlgebra(std::move(field), p, dim, {});
}

PPolarAlgebra truncated_polar_monomials(FieldPtr field, unsigned p, std::size_t max_degree) {
  std::vector<std::size_t> degrees;
  for (std::size_t d = 1; d <= max_degree; d += p - 1) degrees.push_back(d);
  std::map<PPolarAlgebra::Key, Vec> mu;
  const std::size_t n = degrees.size();
  for_each_multiset(n, p, [&](const std::vector<std::size_t>& key) {
    std::size_t total = 0;
    for (auto i : key) total += degrees[i];
    if (total > max_degree) return;
    Vec v(n);
    v[(total - 1) / (p - 1)] = field->one();
    mu.emplace(key, std::move(v));
  });
  return PPolarAlgebra(field, p, n, std::move(mu));
}

Vec mu_eval(const PPolarAlgebra& A, std::span<const Vec> elements) {
  const unsigned p = A.p();
  if (!admissible_length(elements.size(), p)) throw LengthNotAdmissible(elements.size(), p);
  Vec acc = elements[0];
  std::vector<Vec> args(p);
  for (std::size_t pos = 1; pos < elements.size(); pos += p - 1) {
    args[0] = acc;
    for (unsigned k = 1; k < p; ++k) args[k] = elements[pos + k - 1];
    acc = A.mu(args);
  }
  return acc;
}

Vec p_power(const PPolarAlgebra& A, std::span<const Fq> x) {
  std::vector<Vec> args(A.p(), Vec(x.begin(), x.end()));
  return A.mu(args);
}

Vec evaluate_scheme(const PPolarAlgebra& A, const MulScheme& scheme, std::span<const Vec> elements) {
  if (scheme.is_leaf()) return elements[scheme.leaf];
  if (scheme.children.size() != A.p()) throw InvalidInput("multiplication scheme is not p-ary");
  std::vector<Vec> args;
  for (const auto& child : scheme.children) args.push_back(evaluate_scheme(A, child, elements));
  return A.mu(args);
}

AssocReport check_assoc(const PPolarAlgebra& A) {
  const unsigned p = A.p();
  const std::size_t d = A.dim();
  std::map<std::vector<std::size_t>, Vec> cache;
  auto value = [&](std::vector<std::size_t> t) -> const Vec& {
    std::sort(t.begin(), t.begin() + p);
    std::sort(t.begin() + p, t.end());
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    std::vector<Vec> args;
    args.push_back(A.mu_basis(std::span<const std::size_t>(t.data(), p)));
    for (std::size_t k = p; k < t.size(); ++k) args.push_back(unit_vector(d, t[k]));
    return cache.emplace(t, A.mu(args)).first->second;
  };
  AssocReport report;
  for_each_multiset(d, p, [&](const std::vector<std::size_t>& inner) {
    if (!report.ok) return;
    for_each_multiset(d, p - 1, [&](const std::vector<std::size_t>& outer) {
      if (!report.ok) return;
      std::vector<std::size_t> t(inner);
      t.insert(t.end(), outer.begin(), outer.end());
      const Vec base = value(t);
      for (std::size_t s = 0; s + 1 < t.size(); ++s) {
        std::vector<std::size_t> swapped = t;
        std::swap(swapped[s], swapped[s + 1]);
        const Vec& other = value(swapped);
        if (other != base) {
          report.ok = false;
          report.witness = AssocWitness{t, s, base, other};
          return;
        }
      }
    });
  });
  return report;
}

namespace {

// First vector mu(e_a1, ..., e_a{p-1}, v) outside the space, over basis
// vectors v of the space; nullopt if the space is closed.
std::optional<Vec> closure_defect(const PPolarAlgebra& A, const Subspace& space) {
  const FqField& F = *A.field();
  std::optional<Vec> found;
  for (const auto& v : space.basis()) {
    for_each_multiset(A.dim(), A.p() - 1, [&](const std::vector<std::size_t>& a) {
      if (found) return;
      std::vector<Vec> args;
      for (auto i : a) args.push_back(unit_vector(A.dim(), i));
      args.push_back(v);
      Vec w = A.mu(args);
      if (!space.contains(F, w)) found = std::move(w);
    });
    if (found) break;
  }
  return found;
}

}  // namespace

PolarIdeal::PolarIdeal(const PPolarAlgebra& A, Subspace space) : space_(std::move(space)) {
  if (space_.ambient() != A.dim()) throw InvalidInput("ideal lives in the wrong ambient space");
  if (closure_defect(A, space_)) throw InvalidInput("subspace is not closed under mu(A, ..., A, -)");
}

PolarIdeal PolarIdeal::zero(const PPolarAlgebra& A) { return PolarIdeal(Subspace(*A.field(), A.dim(), {}), Unchecked{}); }

PolarIdeal PolarIdeal::whole(const PPolarAlgebra& A) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < A.dim(); ++i) basis.push_back(unit_vector(A.dim(), i));
  return PolarIdeal(Subspace(*A.field(), A.dim(), std::move(basis)), Unchecked{});
}

PolarIdeal ideal_generated(const PPolarAlgebra& A, std::span<const Vec> generators) {
  const FqField& F = *A.field();
  std::vector<Vec> gens(generators.begin(), generators.end());
  Subspace space(F, A.dim(), gens);
  while (auto extra = closure_defect(A, space)) {
    std::vector<Vec> rows = space.basis();
    rows.push_back(std::move(*extra));
    space = Subspace(F, A.dim(), std::move(rows));
  }
  return PolarIdeal(std::move(space), PolarIdeal::Unchecked{});
}

PolarIdeal ideal_power(const PPolarAlgebra& A, const PolarIdeal& I) {
  std::vector<Vec> gens;
  const auto& basis = I.basis();
  for_each_multiset(basis.size(), A.p(), [&](const std::vector<std::size_t>& idx) {
    std::vector<Vec> args;
    for (auto i : idx) args.push_back(basis[i]);
    Vec w = A.mu(args);
    if (!vec_is_zero(w)) gens.push_back(std::move(w));
  });
  return ideal_generated(A, gens);
}

bool ideal_power_nilpotent(const PPolarAlgebra& A, const PolarIdeal& I, unsigned s) {
  PolarIdeal J = I;
  for (unsigned k = 0; k < s && J.dim() > 0; ++k) J = ideal_power(A, J);
  return J.dim() == 0;
}

std::optional<unsigned> vanishing_index(const PPolarAlgebra& A, const PolarIdeal& I) {
  const unsigned p = A.p();
  std::vector<PolarIdeal> J{PolarIdeal::whole(A), I};
  if (I.dim() == 0) return 1U;
  const unsigned cap = static_cast<unsigned>((A.dim() + 2) * p);
  unsigned unchanged = 0;
  for (unsigned k = 2; k <= cap; ++k) {
    std::vector<Vec> gens;
    // Partitions k = k_1 + ... + k_p with k > k_1 >= ... >= k_p >= 0.
    std::vector<unsigned> parts(p, 0);
    std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned slot, unsigned remaining,
                                                                unsigned max_part) {
      if (slot == p) {
        if (remaining != 0) return;
        std::vector<const std::vector<Vec>*> bases;
        for (auto part : parts) bases.push_back(&J[part].basis());
        std::vector<Vec> args(p);
        std::function<void(unsigned)> pick = [&](unsigned j) {
          if (j == p) {
            Vec w = A.mu(args);
            if (!vec_is_zero(w)) gens.push_back(std::move(w));
            return;
          }
          for (const auto& b : *bases[j]) {
            args[j] = b;
            pick(j + 1);
          }
        };
        pick(0);
        return;
      }
      for (unsigned part = std::min(remaining, max_part) + 1; part-- > 0;) {
        parts[slot] = part;
        rec(slot + 1, remaining - part, part);
      }
    };
    rec(0, k, k - 1);
    PolarIdeal next = ideal_generated(A, gens);
    if (next.dim() == 0) return k;
    unchanged = (next == J.back()) ? unchanged + 1 : 0;
    J.push_back(std::move(next));
    if (unchanged >= p) return std::nullopt;
  }
  return std::nullopt;
}

PolarIdeal nilradical(const PPolarAlgebra& A) {
  const FqField& F = *A.field();
  const std::size_t d = A.dim();
  if (d == 0) return PolarIdeal::zero(A);
  // x^p = sum_i x_i^p mu(e_i, ..., e_i) in characteristic p, so the p-power
  // map is x -> M x^{(p)} and its k-th iterate is M_k x^{(p^k)} with
  // M_{k+1} = M frob(M_k).
  std::vector<Vec> columns;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::size_t> idx(A.p(), i);
    columns.push_back(A.mu_basis(idx));
  }
  const FqMatrix M = FqMatrix::from_columns(columns, d);
  FqMatrix Mk = M;
  for (std::size_t k = 1; k < d; ++k) Mk = M.mul(F, Mk.frobenius(F, 1));
  std::vector<Vec> kernel = semilinear_kernel(F, Mk, static_cast<std::int64_t>(d));
  return PolarIdeal(A, Subspace(F, d, std::move(kernel)));
}

Quotient quotient(const PPolarAlgebra& A, const PolarIdeal& I) {
  const FqField& F = *A.field();
  const std::size_t d = A.dim();
  std::vector<bool> pivot(d, false);
  for (auto c : I.space().pivots()) pivot[c] = true;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < d; ++c) {
    if (!pivot[c]) keep.push_back(c);
  }
  const std::size_t r = keep.size();
  FqMatrix proj(r, d), lift(d, r);
  for (std::size_t j = 0; j < d; ++j) {
    Vec red = I.space().reduce(F, unit_vector(d, j));
    for (std::size_t i = 0; i < r; ++i) proj.at(i, j) = red[keep[i]];
  }
  for (std::size_t i = 0; i < r; ++i) lift.at(keep[i], i) = F.one();
  std::map<PPolarAlgebra::Key, Vec> mu;
  for_each_multiset(r, A.p(), [&](const std::vector<std::size_t>& key) {
    std::vector<std::size_t> ambient;
    for (auto i : key) ambient.push_back(keep[i]);
    mu.emplace(key, proj.apply(F, A.mu_basis(ambient)));
  });
  auto Q = std::make_shared<const PPolarAlgebra>(A.field(), A.p(), r, std::move(mu));
  return Quotient{std::move(Q), std::move(proj), std::move(lift)};
}

PPolarAlgebra induced_algebra(const PPolarAlgebra& A, std::span<const Vec> basis) {
  const FqField& F = *A.field();
  std::map<PPolarAlgebra::Key, Vec> mu;
  for_each_multiset(basis.size(), A.p(), [&](const std::vector<std::size_t>& key) {
    std::vector<Vec> args;
    for (auto i : key) args.push_back(basis[i]);
    auto coeffs = solve_in_span(F, basis, A.mu(args));
    if (!coeffs) throw InvalidInput("subspace is not closed under mu");
    mu.emplace(key, std::move(*coeffs));
  });
  return PPolarAlgebra(A.field(), A.p(), basis.size(), std::move(mu));
}

PPolarAlgebra extend_scalars(const PPolarAlgebra& A, const FieldEmbedding& embedding) {
  if (!(*embedding.source() == *A.field())) throw InvalidInput("embedding does not start at the algebra's field");
  std::map<PPolarAlgebra::Key, Vec> mu;
  for (const auto& [key, val] : A.structure()) mu.emplace(key, embedding(val));
  return PPolarAlgebra(embedding.target(), A.p(), A.dim(), std::move(mu));
}

ScalarExtension extend_scalars(const PPolarAlgebra& A, unsigned m) {
  if (m == 0) throw InvalidInput("extension degree must be positive");
  FieldEmbedding emb = m == 1 ? FieldEmbedding::identity(A.field())
                              : FieldEmbedding(A.field(), FqField::build(A.p(), A.field()->degree() * m));
  auto ext = std::make_shared<const PPolarAlgebra>(extend_scalars(A, emb));
  return ScalarExtension{std::move(ext), std::move(emb), m};
}

bool is_morphism(const PPolarAlgebra& A, const PPolarAlgebra& B, const FqMatrix& M) {
  if (M.rows() != B.dim() || M.cols() != A.dim() || A.p() != B.p()) return false;
  const FqField& F = *A.field();
  bool ok = true;
  for_each_multiset(A.dim(), A.p(), [&](const std::vector<std::size_t>& key) {
    if (!ok) return;
    std::vector<Vec> images;
    for (auto i : key) images.push_back(M.column(i));
    if (M.apply(F, A.mu_basis(key)) != B.mu(images)) ok = false;
  });
  return ok;
}

std::vector<PolarMonomial> free_polar_basis(unsigned p, std::size_t nvars, std::size_t max_blocks) {
  std::vector<PolarMonomial> out;
  for (std::size_t i = 0; i <= max_blocks; ++i) {
    for_each_multiset(nvars, 1 + i * (p - 1),
                      [&](const std::vector<std::size_t>& m) { out.push_back(PolarMonomial{m}); });
  }
  return out;
}

}  // namespace wittpolar
