#include <set>

#include "verify_internal.hpp"
#include "wittpolar/fgl.hpp"

namespace wittpolar::detail {

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

PTypicalLog hazewinkel_log(unsigned p, std::size_t D) { return typicalize_log(log_one_plus(D), p); }

}  // namespace

std::vector<CheckResult> suite_formal_groups(const VerifyOptions& opts) {
  Recorder rec("formal-groups");
  auto rng = suite_rng(opts.seed, "formal-groups");
  constexpr std::size_t D = 25;

  if (!opts.p || *opts.p == 2) {
    rec.guarded("typical part of log(1+x) at p=2", [&] {
      PTypicalLog lg = hazewinkel_log(2, 15);
      std::vector<Rational> want{Rational(1), Rational(-1, 2), Rational(-1, 4), Rational(-1, 8)};
      rec.check("typical part of log(1+x) at p=2", lg.l == want);
    });
  }

  for (unsigned p : primes_for(opts, {2, 3, 5})) {
    const std::string tag = "p=" + std::to_string(p);
    rec.guarded("exp support " + tag, [&] {
      std::vector<PTypicalLog> logs{hazewinkel_log(p, D)};
      std::vector<Rational> inv_powers{Rational(1)};
      for (std::size_t e = p; e <= D; e *= p) inv_powers.push_back(inv_powers.back() / p);
      logs.push_back(make_log(p, D, inv_powers));
      for (int r = 0; r < 6; ++r) {
        std::vector<Rational> l{Rational(1)};
        for (std::size_t e = p; e <= D; e *= p) {
          long num = static_cast<long>(random_index(19, rng)) - 9;
          long den = 1 + static_cast<long>(random_index(12, rng));
          l.push_back(Rational(num, den));
        }
        for (auto& c : l) c.canonicalize();
        logs.push_back(make_log(p, D, l));
      }
      std::size_t ok = 0;
      std::string bad;
      for (const auto& lg : logs) {
        SupportReport s = support_check(exp_from_log(lg), p);
        if (s.ok)
          ++ok;
        else
          bad = " first offender degree " + std::to_string(s.offenders.front());
      }
      rec.check("exp support " + tag, ok == logs.size(),
                std::to_string(ok) + "/" + std::to_string(logs.size()) + " logs to degree " + std::to_string(D) + bad);
    });
  }

  for (unsigned p : primes_for(opts, {2, 3})) {
    const std::string tag = "p=" + std::to_string(p);
    rec.guarded("law from log(1+x) " + tag, [&] {
      PTypicalLog lg = hazewinkel_log(p, 15);
      BivariateLaw law = group_law(lg, 15);
      bool assoc = associativity_check(group_law(lg, 10), 10);
      auto bad = non_integral_terms(law);
      rec.check("unit and symmetry " + tag, law.unit_ok && law.symmetric);
      rec.check("polar degrees " + tag, law.polar_degrees);
      rec.check("associative to degree 10 " + tag, assoc);
      rec.check("p-integral to degree 15 " + tag, bad.empty(), std::to_string(bad.size()) + " non-integral terms");
      auto coord = multiplicative_coordinate(lg);
      rec.check("multiplicative coordinate p-integral " + tag, non_integral_terms(coord, p).empty());
    });
  }
  return rec.take();
}

namespace {

// f(a) = sum c_k a^k with honest powers in R; c_k = coefficients of the
// coordinate change mod p.
Vec apply_series(const CommutativeAlgebra& R, const std::vector<Fq>& c, const Vec& a) {
  const FqField& F = *R.field;
  Vec out = vec_zero(R.dim), pw = a;
  for (std::size_t k = 1; k < c.size(); ++k) {
    vec_axpy(F, c[k], pw, out);
    pw = R.mul(pw, a);
  }
  return out;
}

struct IsoReport {
  bool bijective = true;
  bool homomorphism = true;
};

// a -> f(a) from ((N, a + b + ab)) to (nil(pol(N)), *).
IsoReport multiplicative_iso(const CommutativeAlgebra& R, const StarGroup& G, const PTypicalLog& lg) {
  const FqField& F = *R.field;
  TruncSeries f = multiplicative_coordinate(lg);
  std::vector<Fq> c(G.truncation() + 1);
  for (std::size_t k = 1; k < c.size() && k <= f.precision(); ++k)
    c[k] = F.from_int(reduce_rational(f[k], F.characteristic()));
  IsoReport r;
  auto E = G.elements();
  std::set<Vec> image;
  for (const auto& a : E) image.insert(apply_series(R, c, a));
  r.bijective = image.size() == E.size();
  for (const auto& a : E) {
    for (const auto& b : E) {
      Vec ab = vec_add(F, vec_add(F, a, b), R.mul(a, b));
      if (apply_series(R, c, ab) != G.star(apply_series(R, c, a), apply_series(R, c, b))) {
        r.homomorphism = false;
        return r;
      }
    }
  }
  return r;
}

}  // namespace

std::vector<CheckResult> suite_star_group(const VerifyOptions& opts) {
  Recorder rec("star-group");
  struct Case {
    unsigned p;
    std::size_t N;
    std::size_t order;
    std::vector<std::uint64_t> invariants;
  };
  const Case cases[] = {{2, 4, 8, {4, 2}}, {3, 3, 9, {3, 3}}};
  for (const auto& cs : cases) {
    if (opts.p && *opts.p != cs.p) continue;
    FieldPtr F = FqField::build(cs.p, 1);
    const std::string tag = "pol(xF" + std::to_string(cs.p) + "[x]/(x^" + std::to_string(cs.N) + "))";
    rec.guarded(tag, [&] {
      CommutativeAlgebra R = algebras::augmentation_ideal(F, cs.N);
      auto A = std::make_shared<const PPolarAlgebra>(polarize(R, cs.p));
      PTypicalLog lg = hazewinkel_log(cs.p, 10);
      StarGroup G = mu_pinfty_group(A, group_law(lg, 10));
      GroupSummary s = summarize(G);
      bool ok = s.order == cs.order && s.abelian && s.associative && s.p_group && s.invariants == cs.invariants;
      rec.check("group structure of " + tag, ok,
                "order " + std::to_string(s.order) + ", invariants " + join(s.invariants));
      IsoReport iso = multiplicative_iso(R, G, lg);
      rec.check("isomorphic to 1 + xF" + std::to_string(cs.p) + "[x]/(x^" + std::to_string(cs.N) + ")",
                iso.bijective && iso.homomorphism,
                std::string(iso.bijective ? "bijective" : "not bijective") +
                    (iso.homomorphism ? ", multiplicative" : ", not multiplicative"));
      if (cs.N == cs.p) {
        // Same mu = 0 structure as the trivial algebra: identical tables.
        auto T = std::make_shared<const PPolarAlgebra>(trivial_algebra(F, cs.p, cs.N - 1));
        StarGroup H = mu_pinfty_group(T, group_law(lg, 10));
        bool same = true;
        auto E = G.elements();
        for (const auto& a : E)
          for (const auto& b : E) same = same && G.star(a, b) == H.star(a, b);
        rec.check("same star table as the trivial algebra, p=" + std::to_string(cs.p), same);
      }
    });
  }
  if (!opts.p || *opts.p == 2) {
    rec.guarded("rejects non-nilpotent operands", [&] {
      FieldPtr F = FqField::build(2, 1);
      auto A = std::make_shared<const PPolarAlgebra>(polarize(algebras::split(F, 1), 2));
      StarGroup G = mu_pinfty_group(A, group_law(hazewinkel_log(2, 10), 10));
      try {
        G.star(Vec{F->one()}, Vec{F->one()});
        rec.check("rejects non-nilpotent operands", false, "no exception");
      } catch (const NonNilpotentElement&) {
        rec.check("rejects non-nilpotent operands", true);
      }
    });
  }
  return rec.take();
}

}  // namespace wittpolar::detail
