#include <optional>

#include "verify_internal.hpp"
#include "wittpolar/cowitt.hpp"

namespace wittpolar::detail {

namespace {

struct CwCase {
  std::string label;
  AlgebraPtr algebra;
  std::vector<Vec> tail_basis;  // tails are drawn from this span
  int pairs;
};

CoWittElement random_cw(const CwCase& c, bool zero_tail, Rng& rng) {
  const auto& A = *c.algebra;
  const FqField& F = *A.field();
  Vec tail = A.zero();
  if (!zero_tail)
    for (const auto& b : c.tail_basis) vec_axpy(F, random_fq(F, rng), b, tail);
  CoWittElement::Exceptions exc;
  for (long i = 0; i >= -3; --i)
    if (random_index(2, rng) == 1) exc.emplace(i, random_vec(F, A.dim(), rng));
  CoWittElement x(c.algebra, tail, exc, {0, 0});
  auto v = cw_validate(x);
  if (!v.valid) throw InternalInvariant("random co-Witt vector has no witness");
  x.set_witness(*v.witness);
  return x;
}

// First stabilized value of seq at or after start: `repeats` equal entries.
std::optional<Vec> detect(const std::vector<Vec>& seq, std::size_t start, unsigned repeats) {
  unsigned run = 0;
  for (std::size_t m = start; m < seq.size(); ++m) {
    run = (m > start && seq[m] == seq[m - 1]) ? run + 1 : 1;
    if (run >= repeats) return seq[m];
  }
  return std::nullopt;
}

std::vector<CwCase> cases(const VerifyOptions& opts) {
  std::vector<CwCase> out;
  auto add = [&](unsigned p, const std::string& label, const CommutativeAlgebra& R, int pairs) {
    if (opts.p && *opts.p != p) return;
    auto A = std::make_shared<const PPolarAlgebra>(polarize(R, p));
    out.push_back({label, A, nilradical(*A).basis(), pairs});
  };
  FieldPtr F2 = FqField::build(2, 1), F3 = FqField::build(3, 1);
  add(2, "pol(xF2[x]/(x^4))", algebras::augmentation_ideal(F2, 4), 50);
  add(3, "pol(xF3[x]/(x^3))", algebras::augmentation_ideal(F3, 3), 50);
  add(3, "pol(xF3[x]/(x^5))", algebras::augmentation_ideal(F3, 5), 15);
  add(2, "pol(F2[x]/(x^3))", algebras::quotient_ring(F2, Vec{Fq{0}, Fq{0}, Fq{0}, Fq{1}}), 15);
  return out;
}

}  // namespace

std::vector<CheckResult> suite_cowitt(const VerifyOptions& opts) {
  Recorder rec("cowitt");
  auto rng = suite_rng(opts.seed, "cowitt");
  for (const auto& c : cases(opts)) {
    rec.guarded(c.label, [&] {
      const int kPairs = c.pairs;
      const unsigned p = c.algebra->p();
      const unsigned repeats = static_cast<unsigned>(c.algebra->dim()) + 2;
      int stab = 0, comm = 0, assoc = 0, offset = 0, unit = 0, finite = 0, fv = 0, vf = 0;
      for (int i = 0; i < kPairs; ++i) {
        auto x = random_cw(c, false, rng), y = random_cw(c, false, rng), z = random_cw(c, false, rng);
        std::optional<CoWittElement> s;
        try {
          s = cw_add(x, y);
          ++stab;
        } catch (const StabilizationNotDetected&) {
          continue;
        }
        if (*s == cw_add(y, x)) ++comm;
        if (cw_add(*s, z) == cw_add(x, cw_add(y, z))) ++assoc;
        if (cw_add(x, CoWittElement::zero(c.algebra)) == x) ++unit;

        bool off = true;
        const long deepest = std::max(x.depth(), y.depth()) + 1;
        for (long n : {0L, deepest}) {
          auto seq = cw_sum_sequence(x, y, n, 40);
          auto a = detect(seq, 0, repeats), b = detect(seq, 7, repeats);
          off = off && a && b && *a == *b && *a == s->at(-n) && seq.back() == *a;
        }
        if (off) ++offset;

        auto fx = random_cw(c, true, rng), fy = random_cw(c, true, rng);
        auto via_cwu = cw_from_cwu(cwu_add(cwu_from_cw(fx), cwu_from_cw(fy)));
        if (cw_add(fx, fy) == via_cwu) ++finite;

        auto px = cw_multiple(p, x);
        if (cw_F(cw_V(x)) == px) ++fv;
        if (cw_V(cw_F(x)) == px) ++vf;
      }
      auto frac = [&](int k) { return std::to_string(k) + "/" + std::to_string(kPairs); };
      rec.check("stabilizes " + c.label, stab == kPairs, frac(stab));
      rec.check("commutative " + c.label, comm == kPairs, frac(comm));
      rec.check("associative " + c.label, assoc == kPairs, frac(assoc));
      rec.check("zero is neutral " + c.label, unit == kPairs, frac(unit));
      rec.check("offset independent " + c.label, offset == kPairs, frac(offset));
      rec.check("finite support matches CW^u " + c.label, finite == kPairs, frac(finite));
      rec.check("FV=p " + c.label, fv == kPairs, frac(fv));
      rec.check("VF=p " + c.label, vf == kPairs, frac(vf));
    });
  }

  if (!opts.p || *opts.p == 2) {
    rec.guarded("V is not injective on CW^u", [&] {
      FieldPtr F = FqField::build(2, 1);
      auto A = std::make_shared<const PPolarAlgebra>(polarize(algebras::augmentation_ideal(F, 4), 2));
      CwuClass c(A, {unit_vector(3, 0)});
      rec.check("V is not injective on CW^u", !c.is_zero() && cwu_V(c).is_zero(),
                "V kills the class of a length-1 vector");
    });
  }
  return rec.take();
}

}  // namespace wittpolar::detail
