#include <algorithm>

#include "verify_internal.hpp"
#include "wittpolar/etale.hpp"

namespace wittpolar::detail {

namespace {

const std::pair<unsigned, unsigned> kSmallFields[] = {{2, 1}, {3, 1}, {2, 2}};

bool is_identity(const std::vector<std::size_t>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

// Number of roots of f (over F) in F_{q^s}.
std::size_t count_roots(const FieldPtr& F, const Vec& f, unsigned s) {
  FieldPtr G = FqField::build(F->characteristic(), F->degree() * s);
  FieldEmbedding emb = s == 1 ? FieldEmbedding::identity(F) : FieldEmbedding(F, G);
  Vec g = emb(f);
  std::size_t n = 0;
  for (std::uint32_t a = 0; a < G->size(); ++a) {
    Fq acc = G->zero();
    for (std::size_t i = g.size(); i-- > 0;) acc = G->add(G->mul(acc, Fq{a}), g[i]);
    if (acc == G->zero()) ++n;
  }
  return n;
}

Vec random_monic(const FqField& F, std::size_t d, Rng& rng) {
  Vec f = random_vec(F, d + 1, rng);
  f[d] = F.one();
  return f;
}

}  // namespace

std::vector<CheckResult> suite_etale(const VerifyOptions& opts) {
  Recorder rec("etale");
  auto rng = suite_rng(opts.seed, "etale");

  const std::pair<unsigned, unsigned> split_fields[] = {{2, 1}, {3, 1}, {2, 2}};
  for (auto [p, m] : split_fields) {
    if (opts.p && *opts.p != p) continue;
    FieldPtr F = FqField::build(p, m);
    const std::string name = "split algebras over " + field_label(*F);
    rec.guarded(name, [&] {
      std::size_t ok = 0, total = 0, extended = 0;
      for (int inst = 0; inst < 20; ++inst) {
        const std::size_t n = 1 + inst % 4;
        CommutativeAlgebra R = algebras::change_basis(algebras::split(F, n), random_invertible(*F, n, rng));
        Decomposition D = decompose(polarize(R, p));
        ++total;
        if (D.factor_count() == n && is_identity(D.frobenius_permutation)) ++ok;
        if (D.base_extension_degree != 1) ++extended;
      }
      rec.check(name, ok == total,
                std::to_string(ok) + "/" + std::to_string(total) + " with n factors fixed by Frobenius, " +
                    std::to_string(extended) + " needed a scalar extension");
    });
  }

  const std::pair<unsigned, unsigned> ext_cases[] = {{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}};
  for (auto [q, k] : ext_cases) {
    const unsigned p = q == 4 ? 2 : q;
    if (opts.p && *opts.p != p) continue;
    FieldPtr F = FqField::build(p, q == 4 ? 2 : 1);
    const std::string name = "pol(F_" + std::to_string(q) + "^" + std::to_string(k) + ") over F" + std::to_string(q);
    rec.guarded(name, [&] {
      Decomposition D = decompose(polarize(algebras::field_extension(F, k), p));
      auto cycles = permutation_cycles(D.frobenius_permutation);
      bool ok = D.factor_count() == k && cycles.size() == 1 && D.base_extension_degree == k;
      rec.check(name, ok, "permutation " + cycle_notation(D.frobenius_permutation));
    });
  }

  // Geometric points against root counts of F_q[x]/(f) and products.
  for (auto [p, m] : kSmallFields) {
    if (opts.p && *opts.p != p) continue;
    FieldPtr F = FqField::build(p, m);
    const std::string name = "geometric points over " + field_label(*F);
    rec.guarded(name, [&] {
      std::size_t ok = 0, total = 0;
      for (int inst = 0; inst < 15; ++inst) {
        std::vector<Vec> polys{random_monic(*F, 1 + random_index(3, rng), rng)};
        const std::size_t d0 = polys[0].size() - 1;
        if (d0 < 3 && random_index(2, rng) == 1) polys.push_back(random_monic(*F, 1 + random_index(3 - d0, rng), rng));
        CommutativeAlgebra R = algebras::quotient_ring(F, polys[0]);
        for (std::size_t i = 1; i < polys.size(); ++i) R = algebras::product(R, algebras::quotient_ring(F, polys[i]));
        R = algebras::change_basis(R, random_invertible(*F, R.dim, rng));
        GeometricPoints G = geometric_points(polarize(R, p));
        bool good = true;
        for (unsigned s = 1; s <= 3; ++s) {
          std::size_t roots = 0;
          for (const auto& f : polys) roots += count_roots(F, f, s);
          std::size_t predicted = 0;
          for (const auto& o : G.orbits)
            if (s % o.size() == 0) predicted += o.size();
          good = good && roots == predicted;
        }
        std::size_t orbit_total = 0;
        for (const auto& o : G.orbits) orbit_total += o.size();
        good = good && orbit_total == G.count;
        ++total;
        if (good) ++ok;
      }
      rec.check(name, ok == total, std::to_string(ok) + "/" + std::to_string(total) + " algebras");
    });
  }

  if (!opts.p || *opts.p == 2) {
    rec.guarded("nilpotent algebra has no factors", [&] {
      FieldPtr F = FqField::build(2, 1);
      Decomposition D = decompose(polarize(algebras::augmentation_ideal(F, 4), 2));
      rec.check("nilpotent algebra has no factors", D.factor_count() == 0 && D.reduced_dim == 0);
    });
  }
  return rec.take();
}

std::vector<CheckResult> suite_idempotent(const VerifyOptions& opts) {
  Recorder rec("idempotent");
  auto rng = suite_rng(opts.seed, "idempotent");

  if (!opts.p || *opts.p == 2) {
    rec.guarded("pol(F4) over F2 from the generator", [&] {
      FieldPtr F = FqField::build(2, 1);
      PPolarAlgebra A = polarize(algebras::field_extension(F, 2), 2);
      Vec y = unit_vector(2, 1);
      IdempotentResult r = find_idempotent(A, y);
      const FqField& G = *r.embedding.target();
      Vec y2 = r.embedding(p_power(A, y));
      Vec sum = vec_add(G, r.embedding(y), y2);
      Vec one = r.embedding(Vec{F->one(), F->zero()});
      bool ok = r.e == one && r.e == sum;
      rec.check("pol(F4) over F2 from the generator", ok,
                "e = (" + std::to_string(r.e[0].v) + ", " + std::to_string(r.e[1].v) + "), extension degree " +
                    std::to_string(r.extension_degree));
    });
  }

  const std::pair<unsigned, unsigned> fields[] = {{2, 1}, {3, 1}, {2, 2}};
  for (auto [p, m] : fields) {
    if (opts.p && *opts.p != p) continue;
    FieldPtr F = FqField::build(p, m);
    const std::string name = "random reduced algebras over " + field_label(*F);
    rec.guarded(name, [&] {
      std::size_t ok = 0, total = 0;
      unsigned max_ext = 1;
      for (int inst = 0; inst < 17; ++inst) {
        PPolarAlgebra A = polarize(random_reduced(F, 4, rng), p);
        Vec y;
        do y = random_vec(*F, A.dim(), rng);
        while (vec_is_zero(y));
        IdempotentResult r = find_idempotent(A, y);
        PPolarAlgebra B = extend_scalars(A, r.embedding);
        ++total;
        if (!vec_is_zero(r.e) && p_power(B, r.e) == r.e) ++ok;
        max_ext = std::max(max_ext, r.extension_degree);
      }
      rec.check(name, ok == total,
                std::to_string(ok) + "/" + std::to_string(total) + " with e^p = e, e != 0; largest extension " +
                    std::to_string(max_ext));
    });
  }

  if (!opts.p || *opts.p == 2) {
    try {
      FieldPtr F = FqField::build(2, 1);
      find_idempotent(polarize(algebras::augmentation_ideal(F, 3), 2), unit_vector(2, 0));
      rec.check("rejects non-reduced input", false, "no exception");
    } catch (const NotReduced&) {
      rec.check("rejects non-reduced input", true);
    }
  }
  return rec.take();
}

}  // namespace wittpolar::detail
