#include <functional>

#include "verify_internal.hpp"

namespace wittpolar::detail {

namespace {

struct Tally {
  std::size_t ok = 0, total = 0;
  void add(bool b) {
    ++total;
    if (b) ++ok;
  }
  bool passed() const { return ok == total && total > 0; }
  std::string text() const { return std::to_string(ok) + "/" + std::to_string(total) + " instances"; }
};

WittVector random_scalar(const FieldPtr& F, unsigned p, std::size_t n, Rng& rng) {
  return random_witt(polarized_field(F, p), n, rng);
}

}  // namespace

std::vector<CheckResult> suite_dieudonne(const VerifyOptions& opts) {
  Recorder rec("dieudonne");
  auto rng = suite_rng(opts.seed, "dieudonne");
  const std::pair<unsigned, unsigned> fields[] = {{2, 1}, {2, 2}, {3, 2}};
  constexpr std::size_t kPerField = 70;
  for (auto [p, m] : fields) {
    if (opts.p && *opts.p != p) continue;
    FieldPtr F = FqField::build(p, m);
    const std::string tag = field_label(*F);
    Tally fv, vf, fa, va, fpoly;
    rec.guarded("relations over " + tag, [&] {
      for (std::size_t i = 0; i < kPerField; ++i) {
        auto A = std::make_shared<const PPolarAlgebra>(polarize(random_commutative(F, 4, rng), p));
        const std::size_t n = 1 + i % 3;
        auto x = random_witt(A, n, rng);
        auto x1 = random_witt(A, n + 1, rng);
        auto a1 = random_scalar(F, p, n + 1, rng);
        fv.add(frobenius_charp(verschiebung(x)) == w_multiple(p, x));
        vf.add(verschiebung(frobenius_charp(x1)) == w_multiple(p, x1));
        fa.add(frobenius_charp(scalar_mul(a1, x1)) ==
               scalar_mul(truncate(scalar_frobenius(a1, 1), n), frobenius_charp(x1)));
        va.add(verschiebung(scalar_mul(truncate(a1, n), x)) ==
               scalar_mul(scalar_frobenius(a1, -1), verschiebung(x)));
        fpoly.add(frobenius_charp(x1) == frobenius_by_polys(x1));
      }
      rec.check("FV=p over " + tag, fv.passed(), fv.text());
      rec.check("VF=p over " + tag, vf.passed(), vf.text());
      rec.check("F(a.x)=phi(a).F(x) over " + tag, fa.passed(), fa.text());
      rec.check("V(a.x)=phi^-1(a).V(x) over " + tag, va.passed(), va.text());
      rec.check("F by p-powers = F by polynomials over " + tag, fpoly.passed(), fpoly.text());
    });
  }
  return rec.take();
}

namespace {

// sum over subsets I of (-1)^{|I|} t(sum_{i in I} x_i) in W_2(Z[x_1..x_k]).
std::pair<MultiPoly, MultiPoly> teichmuller_alternating_sum(unsigned p, std::size_t k) {
  auto S = universal_polys(p, 2, WittKind::sum);
  auto N = universal_polys(p, 2, WittKind::neg);
  auto apply = [](const UniversalFamily& f, const std::vector<MultiPoly>& args) {
    std::map<std::size_t, MultiPoly> bind;
    for (std::size_t i = 0; i < args.size(); ++i) bind.emplace(i, args[i]);
    return std::pair{poly_substitute(f.components[0], bind), poly_substitute(f.components[1], bind)};
  };
  MultiPoly zero(k);
  std::pair<MultiPoly, MultiPoly> acc{zero, zero};
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    MultiPoly s(k);
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1U << i)) s += MultiPoly::variable(k, i);
    std::pair<MultiPoly, MultiPoly> t{s, zero};
    if (__builtin_popcount(mask) % 2 == 1) t = apply(*N, {t.first, t.second, zero, zero});
    acc = apply(*S, {acc.first, acc.second, t.first, t.second});
  }
  return acc;
}

// (-1)^k / p * sum of multinomial(p; i) x^i over i with every i_j >= 1.
MultiPoly expected_teichmuller(unsigned p, std::size_t k) {
  MultiPoly out(k);
  Exponents e(k, 1);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t j, unsigned left) {
    if (j + 1 == k) {
      e[j] = left;
      Integer multinom = 1, fact = 1;
      for (unsigned i = 2; i <= p; ++i) multinom *= i;
      for (std::size_t r = 0; r < k; ++r) {
        fact = 1;
        for (unsigned i = 2; i <= e[r]; ++i) fact *= i;
        multinom /= fact;
      }
      Rational c(multinom, p);
      c.canonicalize();
      if (k % 2 == 1) c = -c;
      out.add_term(e, c);
      return;
    }
    for (unsigned v = 1; v + (k - j - 1) <= left; ++v) {
      e[j] = v;
      rec(j + 1, left - v);
    }
  };
  rec(0, p);
  return out;
}

}  // namespace

std::vector<CheckResult> suite_teichmuller(const VerifyOptions& opts) {
  Recorder rec("teichmuller");
  auto rng = suite_rng(opts.seed, "teichmuller");

  for (unsigned p : primes_for(opts, {2, 3, 5})) {
    for (std::size_t k = 2; k <= p; ++k) {
      const std::string name = "symbolic p=" + std::to_string(p) + " k=" + std::to_string(k);
      rec.guarded(name, [&] {
        auto [c0, c1] = teichmuller_alternating_sum(p, k);
        MultiPoly want = expected_teichmuller(p, k);
        bool ok = c0.is_zero() && c1 == want && c1.is_integral();
        std::vector<bool> mask(k, true);
        ok = ok && polar_degree_check(c1, mask, p);
        std::string detail = "sign (-1)^k";
        if (k == p) {
          // Reduces to (0, x_1 ... x_p) mod p.
          ModPPoly r = reduce_mod_p(c1, p);
          bool prod = r.terms.size() == 1 && r.terms.begin()->first == Exponents(k, 1) && r.terms.begin()->second == 1;
          ok = ok && prod;
          detail += prod ? ", mod p equals x1...xp" : ", mod p is not x1...xp";
        }
        if (k % 2 == 1 && k >= 3) {
          Exponents ones(k, 0);
          for (std::size_t i = 0; i < k; ++i) ones[i] = 1;
          if (p == k) detail += ", coefficient of x1...xk is " + c1.coefficient(ones).get_str() +
                                " (the form without (-1)^k would give " + Rational(-c1.coefficient(ones)).get_str() + ")";
        }
        rec.check(name, ok, detail);
      });
    }
  }

  // Numerically: sum (-1)^{|I|} t(s_I) = (0, mu(x_1, ..., x_p)) in W_2(A).
  const std::pair<unsigned, unsigned> fields[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}};
  for (auto [p, m] : fields) {
    if (opts.p && *opts.p != p) continue;
    FieldPtr F = FqField::build(p, m);
    const std::string name = "in random algebras over " + field_label(*F);
    rec.guarded(name, [&] {
      Tally t;
      for (int inst = 0; inst < 20; ++inst) {
        auto A = std::make_shared<const PPolarAlgebra>(polarize(random_commutative(F, 4, rng), p));
        std::vector<Vec> xs;
        for (unsigned i = 0; i < p; ++i) xs.push_back(random_vec(*F, A->dim(), rng));
        WittVector acc = WittVector::zero(A, 2);
        for (std::uint32_t mask = 1; mask < (1U << p); ++mask) {
          Vec s = A->zero();
          for (unsigned i = 0; i < p; ++i)
            if (mask & (1U << i)) s = vec_add(*F, s, xs[i]);
          WittVector term = teichmuller(A, s, 2);
          acc = __builtin_popcount(mask) % 2 == 1 ? w_sub(acc, term) : w_add(acc, term);
        }
        t.add(acc == WittVector(A, {A->zero(), A->mu(xs)}));
      }
      rec.check(name, t.passed(), t.text());
    });
  }
  return rec.take();
}

namespace {

std::vector<WittVector> all_vectors(const AlgebraPtr& A, std::size_t n) {
  const FqField& F = *A->field();
  const std::size_t slots = n * A->dim();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < slots; ++i) count *= F.size();
  std::vector<WittVector> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::uint64_t t = c;
    std::vector<Vec> coords(n, Vec(A->dim()));
    for (auto& v : coords)
      for (auto& e : v) {
        e = Fq{static_cast<std::uint32_t>(t % F.size())};
        t /= F.size();
      }
    out.emplace_back(A, std::move(coords));
  }
  return out;
}

WittVector rebase(const AlgebraPtr& B, const WittVector& x) { return WittVector(B, x.coords()); }

}  // namespace

std::vector<CheckResult> suite_invariance(const VerifyOptions& opts) {
  Recorder rec("polarization-invariance");
  auto rng = suite_rng(opts.seed, "polarization-invariance");
  for (unsigned p : primes_for(opts, {2, 3})) {
    if (p > 3) continue;
    FieldPtr F = FqField::build(p, 1);
    CommutativeAlgebra R = algebras::augmentation_ideal(F, p);
    auto A = std::make_shared<const PPolarAlgebra>(polarize(R, p));
    auto T = std::make_shared<const PPolarAlgebra>(trivial_algebra(F, p, p - 1));
    const std::string tag = "q=" + std::to_string(p);
    rec.check("polarization of xF_q[x]/(x^p) has mu=0 " + tag, A->has_zero_product() && T->has_zero_product());
    if (p == 3) {
      Vec x = unit_vector(2, 0);
      rec.check("xF_3[x]/(x^3) itself has nonzero products", !vec_is_zero(R.mul(x, x)));
    }
    auto scalars_field = polarized_field(F, p);
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::string nt = tag + " n=" + std::to_string(n);
      rec.guarded("tables " + nt, [&] {
        auto xs = all_vectors(A, n);
        bool add = true, neg = true, ver = true, frob = true, scal = true;
        for (const auto& x : xs) {
          auto xt = rebase(T, x);
          neg = neg && w_neg(x) == w_neg(xt);
          ver = ver && verschiebung(x) == verschiebung(xt);
          if (n >= 2) frob = frob && frobenius_by_polys(x) == frobenius_by_polys(xt);
          for (const auto& y : xs) add = add && w_add(x, y) == w_add(xt, rebase(T, y));
        }
        for (const auto& a : all_vectors(scalars_field, n))
          for (const auto& x : xs) scal = scal && scalar_mul(a, x) == scalar_mul(a, rebase(T, x));
        rec.check("add/neg/V/F/scalar tables " + nt, add && neg && ver && frob && scal,
                  std::to_string(xs.size()) + " elements");
      });
      rec.guarded("product table " + nt, [&] {
        auto xs = all_vectors(A, n);
        std::uint64_t tuples = 1;
        for (unsigned i = 0; i < p; ++i) tuples *= xs.size();
        bool ok = true;
        std::string how;
        if (tuples <= 1000000) {
          for (std::uint64_t c = 0; c < tuples; ++c) {
            std::uint64_t t = c;
            std::vector<WittVector> a, b;
            for (unsigned i = 0; i < p; ++i) {
              a.push_back(xs[t % xs.size()]);
              b.push_back(rebase(T, xs[t % xs.size()]));
              t /= xs.size();
            }
            ok = ok && w_product(a) == w_product(b);
          }
          how = "complete, " + std::to_string(tuples) + " tuples";
        } else {
          // Every monomial of the product polynomials has degree >= 2 in the
          // polar variables, so both sides vanish when mu = 0.
          auto polys = universal_polys(p, n, WittKind::prod);
          bool cert = true;
          for (const auto& c : polys->components)
            for (const auto& [e, coef] : c.terms()) {
              std::uint64_t d = 0;
              for (auto v : e) d += v;
              cert = cert && d >= 2;
            }
          constexpr int kSamples = 20000;
          for (int s = 0; s < kSamples; ++s) {
            std::vector<WittVector> a, b;
            for (unsigned i = 0; i < p; ++i) {
              a.push_back(xs[random_index(xs.size(), rng)]);
              b.push_back(rebase(T, a.back()));
            }
            auto u = w_product(a);
            ok = ok && u == w_product(b) && u.is_zero();
          }
          ok = ok && cert;
          how = std::string("certificate ") + (cert ? "holds" : "fails") + " plus " + std::to_string(kSamples) +
                " sampled tuples of " + std::to_string(tuples);
        }
        rec.check("product table " + nt, ok, how);
      });
    }
  }
  return rec.take();
}

}  // namespace wittpolar::detail
