#include "verify_internal.hpp"
#include "wittpolar/wittuniv.hpp"

namespace wittpolar::detail {

namespace {

constexpr WittKind kAllKinds[] = {WittKind::sum, WittKind::neg, WittKind::prod, WittKind::frob, WittKind::scalar};

std::vector<MultiPoly> block(std::size_t nvars, std::size_t offset, std::size_t len) {
  std::vector<MultiPoly> v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(MultiPoly::variable(nvars, offset + i));
  return v;
}

std::vector<MultiPoly> ghost_block(unsigned p, std::size_t nvars, std::size_t offset, std::size_t len) {
  auto b = block(nvars, offset, len);
  return ghost_of(p, b);
}

// Ghost components the family must reproduce, computed without the family.
std::vector<MultiPoly> expected_ghost(const UniversalFamily& f) {
  const unsigned p = f.p;
  const std::size_t n = f.n, nv = f.nvars();
  std::vector<MultiPoly> out;
  switch (f.kind) {
    case WittKind::sum: {
      auto gx = ghost_block(p, nv, 0, n), gy = ghost_block(p, nv, n, n);
      for (std::size_t m = 0; m < n; ++m) out.push_back(gx[m] + gy[m]);
      break;
    }
    case WittKind::neg: {
      auto gx = ghost_block(p, nv, 0, n);
      for (std::size_t m = 0; m < n; ++m) out.push_back(-gx[m]);
      break;
    }
    case WittKind::prod: {
      out.assign(n, MultiPoly::constant(nv, 1));
      for (unsigned j = 0; j < p; ++j) {
        auto g = ghost_block(p, nv, j * n, n);
        for (std::size_t m = 0; m < n; ++m) out[m] = out[m] * g[m];
      }
      break;
    }
    case WittKind::frob: {
      auto gx = ghost_block(p, nv, 0, n + 1);
      for (std::size_t m = 0; m < n; ++m) out.push_back(gx[m + 1]);
      break;
    }
    case WittKind::scalar: {
      auto gx = ghost_block(p, nv, 0, n), ga = ghost_block(p, nv, n, n);
      for (std::size_t m = 0; m < n; ++m) out.push_back(gx[m] * ga[m]);
      break;
    }
  }
  return out;
}

// Substitutes the family's variables by the given polynomials.
std::vector<MultiPoly> compose(const UniversalFamily& f, const std::vector<MultiPoly>& args) {
  std::map<std::size_t, MultiPoly> bind;
  for (std::size_t i = 0; i < args.size(); ++i) bind.emplace(i, args[i]);
  std::vector<MultiPoly> out;
  for (const auto& c : f.components) out.push_back(poly_substitute(c, bind));
  return out;
}

std::vector<MultiPoly> concat(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

MultiPoly parse_terms(std::size_t nvars, std::initializer_list<std::pair<Exponents, long>> terms) {
  MultiPoly f(nvars);
  for (const auto& [e, c] : terms) f.add_term(e, Rational(c));
  return f;
}

std::string pn(unsigned p, std::size_t n) { return "p=" + std::to_string(p) + " n=" + std::to_string(n); }

}  // namespace

std::vector<CheckResult> suite_universal(const VerifyOptions& opts) {
  Recorder rec("universal");
  for (unsigned p : primes_for(opts, {2, 3, 5})) {
    for (std::size_t n = 1; n <= 4; ++n) {
      if (!within_envelope(p, n)) continue;
      for (WittKind k : kAllKinds) {
        const std::string name = std::string("ghost-roundtrip ") + std::string(kind_name(k)) + " " + pn(p, n);
        rec.guarded(name, [&] {
          auto f = universal_polys(p, n, k);
          auto g = ghost_of(p, f->components);
          bool integral = true;
          for (const auto& c : f->components) integral = integral && c.is_integral();
          rec.check(name, integral && g == expected_ghost(*f), integral ? "" : "non-integral coefficient");
        });
      }
    }
  }

  if (!opts.p || *opts.p == 2) {
    rec.guarded("known S1 M1 p=2", [&] {
      auto s = universal_polys(2, 2, WittKind::sum);
      auto m = universal_polys(2, 2, WittKind::prod);
      // sum vars x0 x1 y0 y1; prod vars x0 x1 y0 y1
      MultiPoly S1 = parse_terms(4, {{{0, 0, 0, 1}, 1}, {{0, 1, 0, 0}, 1}, {{1, 0, 1, 0}, -1}});
      MultiPoly M1 = parse_terms(4, {{{0, 1, 0, 1}, 2}, {{0, 1, 2, 0}, 1}, {{2, 0, 0, 1}, 1}});
      rec.check("known S1 M1 p=2", s->components[1] == S1 && m->components[1] == M1,
                "S1=" + to_string(s->components[1], s->names) + " M1=" + to_string(m->components[1], m->names));
    });
    rec.guarded("known N1 F0 p=2", [&] {
      auto ng = universal_polys(2, 2, WittKind::neg);
      auto fr = universal_polys(2, 1, WittKind::frob);
      MultiPoly N1 = parse_terms(4, {{{0, 1, 0, 0}, -1}, {{2, 0, 0, 0}, -1}});
      MultiPoly F0 = parse_terms(2, {{{0, 1}, 2}, {{2, 0}, 1}});
      rec.check("known N1 F0 p=2", ng->components[1] == N1 && fr->components[0] == F0,
                "N1=" + to_string(ng->components[1], ng->names) + " F0=" + to_string(fr->components[0], fr->names));
    });
  }

  for (unsigned p : primes_for(opts, {3, 5})) {
    if (p == 2) continue;
    const std::size_t n = within_envelope(p, 3) ? 3 : 2;
    rec.guarded("neg is -x odd " + pn(p, n), [&] {
      auto f = universal_polys(p, n, WittKind::neg);
      bool ok = true;
      for (std::size_t m = 0; m < n; ++m) ok = ok && f->components[m] == -MultiPoly::variable(f->nvars(), m);
      rec.check("neg is -x odd " + pn(p, n), ok);
    });
  }

  for (unsigned p : primes_for(opts, {2, 3, 5})) {
    const std::size_t n = within_envelope(p, 3) ? 3 : 2;
    rec.guarded("frob mod p is x^p " + pn(p, n), [&] {
      auto f = universal_polys(p, n, WittKind::frob);
      bool ok = true;
      for (std::size_t m = 0; m < n; ++m) {
        ModPPoly r = reduce_mod_p(f->components[m], p);
        Exponents e(f->nvars(), 0);
        e[m] = p;
        ok = ok && r.terms.size() == 1 && r.terms.begin()->first == e && r.terms.begin()->second == 1;
      }
      rec.check("frob mod p is x^p " + pn(p, n), ok);
    });
  }

  // Group axioms and F V = p, symbolically in 3n variables.
  for (unsigned p : primes_for(opts, {2, 3})) {
    for (std::size_t n = 1; n <= 3; ++n) {
      if (!within_envelope(p, n)) continue;
      const std::string tag = pn(p, n);
      rec.guarded("group laws " + tag, [&] {
        auto S = universal_polys(p, n, WittKind::sum);
        auto N = universal_polys(p, n, WittKind::neg);
        const std::size_t nv = 3 * n;
        auto x = block(nv, 0, n), y = block(nv, n, n), z = block(nv, 2 * n, n);
        auto xy = compose(*S, concat(x, y));
        auto yz = compose(*S, concat(y, z));
        bool assoc = compose(*S, concat(xy, z)) == compose(*S, concat(x, yz));
        bool comm = xy == compose(*S, concat(y, x));
        auto negx = compose(*N, concat(x, y));  // neg ignores the y block
        auto zero = compose(*S, concat(x, negx));
        bool inverse = true;
        for (const auto& c : zero) inverse = inverse && c.is_zero();
        auto xz = concat(x, std::vector<MultiPoly>(n, MultiPoly(nv)));
        bool unit = compose(*S, xz) == x;
        rec.check("group laws " + tag, assoc && comm && inverse && unit,
                  std::string(assoc ? "" : "assoc ") + (comm ? "" : "comm ") + (inverse ? "" : "inverse ") +
                      (unit ? "" : "unit"));
      });
    }
  }

  for (unsigned p : primes_for(opts, {2, 3, 5})) {
    for (std::size_t n = 1; n <= 3; ++n) {
      if (!within_envelope(p, n + 1)) continue;
      const std::string tag = pn(p, n);
      rec.guarded("FV=p " + tag, [&] {
        auto Fr = universal_polys(p, n, WittKind::frob);
        const std::size_t nv = n;
        auto vx = concat({MultiPoly(nv)}, block(nv, 0, n));
        auto fv = compose(*Fr, vx);
        auto g = ghost_of(p, fv);
        auto gx = ghost_block(p, nv, 0, n);
        bool ok = true;
        for (std::size_t m = 0; m < n; ++m) ok = ok && g[m] == gx[m].scaled(Rational(p));
        rec.check("FV=p " + tag, ok);
      });
      rec.guarded("F(a.x)=phi(a).F(x) " + tag, [&] {
        auto Fr = universal_polys(p, n, WittKind::frob);
        auto Sc1 = universal_polys(p, n + 1, WittKind::scalar);
        auto Sc = universal_polys(p, n, WittKind::scalar);
        const std::size_t nv = 2 * (n + 1);
        auto x = block(nv, 0, n + 1), a = block(nv, n + 1, n + 1);
        auto lhs = compose(*Fr, compose(*Sc1, concat(x, a)));
        auto rhs = compose(*Sc, concat(compose(*Fr, x), compose(*Fr, a)));
        rec.check("F(a.x)=phi(a).F(x) " + tag, lhs == rhs);
      });
    }
  }
  return rec.take();
}

std::vector<CheckResult> suite_polar_degree(const VerifyOptions& opts) {
  Recorder rec("polar-degree");
  for (unsigned p : primes_for(opts, {2, 3, 5})) {
    for (std::size_t n = 1; n <= 4; ++n) {
      if (!within_envelope(p, n)) continue;
      for (WittKind k : kAllKinds) {
        const std::string name = std::string(kind_name(k)) + " " + pn(p, n);
        rec.guarded(name, [&] {
          auto f = universal_polys(p, n, k);
          std::size_t bad = 0, terms = 0;
          for (std::size_t m = 0; m < n; ++m) {
            if (!polar_degree_check(level_of(*f, m))) ++bad;
            terms += f->components[m].size();
          }
          rec.check(name, bad == 0, std::to_string(terms) + " terms, " + std::to_string(bad) + " bad levels");
        });
      }
    }
  }
  // The checker itself must reject a product of two polar variables.
  for (unsigned p : primes_for(opts, {3, 5})) {
    if (p == 2) continue;
    MultiPoly bad = parse_terms(2, {{{1, 1}, 1}});
    rec.check("rejects x0*y0 p=" + std::to_string(p), !polar_degree_check(bad, {true, true}, p));
  }
  return rec.take();
}

std::vector<CheckResult> suite_dwork(const VerifyOptions& opts) {
  Recorder rec("dwork");
  for (unsigned p : primes_for(opts, {2, 3, 5})) {
    const std::string tag = "p=" + std::to_string(p);
    rec.guarded("teichmuller lift " + tag, [&] {
      std::vector<MultiPoly> t;
      for (std::uint32_t m = 0, e = 1; m < 4; ++m, e *= p) t.push_back(MultiPoly::monomial({e}, 1));
      auto c = dwork_lift(p, t);
      bool ok = c[0] == MultiPoly::variable(1, 0);
      for (std::size_t m = 1; m < c.size(); ++m) ok = ok && c[m].is_zero();
      rec.check("teichmuller lift " + tag, ok);
    });
    rec.guarded("lift is inverse of ghost " + tag, [&] {
      auto h = ghost_block(p, 4, 0, 4);
      auto c = dwork_lift(p, h);
      bool ok = ghost_of(p, c) == h && c == block(4, 0, 4);
      rec.check("lift is inverse of ghost " + tag, ok);
    });
    auto expect_failure = [&](const std::string& name, const std::vector<MultiPoly>& t, unsigned level) {
      try {
        dwork_lift(p, t);
        rec.check(name, false, "no exception");
      } catch (const DworkCongruenceFailed& e) {
        rec.check(name, e.level() == level, "level " + std::to_string(e.level()));
      }
    };
    MultiPoly x = MultiPoly::variable(1, 0);
    expect_failure("constant sequence fails at level 1 " + tag, {x, x, x}, 1);
    MultiPoly xp = MultiPoly::monomial({p}, 1), xpp = MultiPoly::monomial({p * p}, 1);
    expect_failure("perturbed sequence fails at level 2 " + tag,
                   {x, xp, xpp + MultiPoly::constant(1, Rational(p))}, 2);
  }
  return rec.take();
}

}  // namespace wittpolar::detail
