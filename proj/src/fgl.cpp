#include "wittpolar/fgl.hpp"

#include <random>
#include <string>

namespace wittpolar {

TruncSeries PTypicalLog::series() const {
  TruncSeries s(precision);
  std::size_t e = 1;
  for (const auto& c : l) {
    if (e > precision) break;
    s[e] = c;
    e *= p;
  }
  return s;
}

namespace {

void check_prime(unsigned p) {
  if (p < 2 || !is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
}

TermFilter total_degree_at_most(std::size_t D) {
  return [D](const Exponents& e) {
    std::size_t d = 0;
    for (auto x : e) d += x;
    return d <= D;
  };
}

MultiPoly law_poly(const BivariateLaw& law, std::size_t nvars, std::size_t u, std::size_t v) {
  MultiPoly f(nvars);
  for (const auto& [ab, c] : law.terms) {
    Exponents e(nvars, 0);
    e[u] += ab.first;
    e[v] += ab.second;
    f.add_term(e, c);
  }
  return f;
}

}  // namespace

PTypicalLog typicalize_log(const TruncSeries& f, unsigned p) {
  check_prime(p);
  if (f.precision() < 1 || f[0] != 0 || f[1] != 1) throw InvalidInput("a logarithm needs f(0) = 0 and f'(0) = 1");
  PTypicalLog log{p, f.precision(), {}};
  for (std::size_t e = 1; e <= f.precision(); e *= p) log.l.push_back(f[e]);
  return log;
}

PTypicalLog make_log(unsigned p, std::size_t precision, std::vector<Rational> l) {
  check_prime(p);
  if (precision < 1) throw InvalidInput("precision must be at least 1");
  if (l.empty()) l.push_back(Rational(1));
  if (l[0] != 1) throw InvalidInput("the leading log coefficient l_0 must be 1");
  std::size_t usable = 0;
  for (std::size_t e = 1; e <= precision; e *= p) ++usable;
  if (l.size() > usable) {
    throw InvalidInput("got " + std::to_string(l.size()) + " log coefficients but only " + std::to_string(usable) +
                       " exponents p^i fit in precision " + std::to_string(precision));
  }
  l.resize(usable, Rational(0));
  return PTypicalLog{p, precision, std::move(l)};
}

TruncSeries log_one_plus(std::size_t precision) {
  TruncSeries s(precision);
  for (std::size_t k = 1; k <= precision; ++k) s[k] = Rational(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
  return s;
}

TruncSeries exp_from_log(const PTypicalLog& log) { return series_reverse(log.series()); }

SupportReport support_check(const TruncSeries& s, unsigned p) {
  check_prime(p);
  SupportReport r;
  for (std::size_t k = 0; k <= s.precision(); ++k) {
    if (s[k] == 0) continue;
    if (k == 0 || (k - 1) % (p - 1) != 0) {
      r.ok = false;
      r.offenders.push_back(k);
    }
  }
  return r;
}

Rational BivariateLaw::coefficient(std::uint32_t a, std::uint32_t b) const {
  auto it = terms.find({a, b});
  return it == terms.end() ? Rational(0) : it->second;
}

BivariateLaw group_law(const PTypicalLog& log, std::size_t precision) {
  if (precision > log.precision) throw InvalidInput("law precision exceeds the log precision");
  PTypicalLog lg = log;
  lg.precision = precision;
  TruncSeries ex = exp_from_log(lg);
  TermFilter keep = total_degree_at_most(precision);
  MultiPoly S(2);
  std::size_t e = 1;
  for (const auto& c : lg.l) {
    if (e > precision) break;
    S.add_term({static_cast<std::uint32_t>(e), 0}, c);
    S.add_term({0, static_cast<std::uint32_t>(e)}, c);
    e *= lg.p;
  }
  MultiPoly result(2);
  MultiPoly power = S;
  for (std::size_t k = 1; k <= precision; ++k) {
    if (ex[k] != 0) result += power.scaled(ex[k]);
    power = power.mul(S, keep);
    if (power.is_zero()) break;
  }
  BivariateLaw law;
  law.p = log.p;
  law.precision = precision;
  for (const auto& [ex2, c] : result.terms()) law.terms.emplace(std::make_pair(ex2[0], ex2[1]), c);
  law.unit_ok = true;
  law.symmetric = true;
  law.polar_degrees = true;
  for (const auto& [ab, c] : law.terms) {
    const auto [a, b] = ab;
    if ((a == 0 || b == 0) && !((a + b == 1) && c == 1)) law.unit_ok = false;
    if (law.coefficient(b, a) != c) law.symmetric = false;
    if ((a + b - 1) % (log.p - 1) != 0 || a + b == 0) law.polar_degrees = false;
  }
  if (law.coefficient(1, 0) != 1 || law.coefficient(0, 1) != 1) law.unit_ok = false;
  return law;
}

bool associativity_check(const BivariateLaw& law, std::size_t precision) {
  TermFilter keep = total_degree_at_most(precision);
  MultiPoly F2 = law_poly(law, 2, 0, 1);
  MultiPoly Fxy = law_poly(law, 3, 0, 1);
  MultiPoly Fyz = law_poly(law, 3, 1, 2);
  MultiPoly lhs = poly_substitute(F2, {{0, Fxy}, {1, MultiPoly::variable(3, 2)}}, keep);
  MultiPoly rhs = poly_substitute(F2, {{0, MultiPoly::variable(3, 0)}, {1, Fyz}}, keep);
  return lhs == rhs;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> non_integral_terms(const BivariateLaw& law) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& [ab, c] : law.terms) {
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), law.p)) out.push_back(ab);
  }
  return out;
}

std::vector<std::size_t> non_integral_terms(const TruncSeries& s, unsigned p) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= s.precision(); ++k) {
    if (mpz_divisible_ui_p(s[k].get_den_mpz_t(), p)) out.push_back(k);
  }
  return out;
}

TruncSeries multiplicative_coordinate(const PTypicalLog& log) {
  return exp_from_log(log).compose(log_one_plus(log.precision));
}

std::uint32_t reduce_rational(const Rational& c, unsigned p) {
  if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) {
    throw LawNotIntegral("coefficient " + c.get_str() + " has " + std::to_string(p) + " in its denominator");
  }
  Integer num, den, inv;
  mpz_fdiv_r_ui(num.get_mpz_t(), c.get_num_mpz_t(), p);
  mpz_fdiv_r_ui(den.get_mpz_t(), c.get_den_mpz_t(), p);
  Integer mod(p);
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  Integer r = (num * inv) % mod;
  return static_cast<std::uint32_t>(r.get_ui());
}

StarGroup::StarGroup(AlgebraPtr algebra, const BivariateLaw& law)
    : algebra_(std::move(algebra)), nil_(nilradical(*algebra_)), truncation_(0) {
  const PPolarAlgebra& A = *algebra_;
  if (law.p != A.p()) throw InvalidInput("law and algebra have different primes");
  auto K = vanishing_index(A, nil_);
  if (!K) throw InternalInvariant("nilradical is not nilpotent");
  truncation_ = *K;
  if (law.precision + 1 < truncation_) {
    throw InvalidInput("law precision " + std::to_string(law.precision) + " is below the nilpotency bound " +
                       std::to_string(truncation_ - 1));
  }
  const FqField& F = *A.field();
  for (const auto& [ab, c] : law.terms) {
    const auto [a, b] = ab;
    if (a + b >= truncation_) continue;
    if (a + b == 0 || (a + b - 1) % (A.p() - 1) != 0) {
      throw LawNotPolar("term x^" + std::to_string(a) + " y^" + std::to_string(b) + " has degree not 1 mod p-1");
    }
    std::uint32_t r = reduce_rational(c, A.p());
    if (r != 0) terms_.push_back({ab, F.from_int(r)});
  }
}

Vec StarGroup::star(const Vec& x, const Vec& y) const {
  const PPolarAlgebra& A = *algebra_;
  if (!nil_.contains(A, x) || !nil_.contains(A, y)) throw NonNilpotentElement("star operands must be nilpotent");
  const FqField& F = *A.field();
  Vec out = A.zero();
  std::vector<Vec> factors;
  for (const auto& [ab, c] : terms_) {
    if ((ab.first > 0 && vec_is_zero(x)) || (ab.second > 0 && vec_is_zero(y))) continue;
    factors.assign(ab.first, x);
    factors.insert(factors.end(), ab.second, y);
    vec_axpy(F, c, mu_eval(A, factors), out);
  }
  return out;
}

Vec StarGroup::power(const Vec& x, std::uint64_t k) const {
  Vec acc = algebra_->zero();
  Vec base = x;
  while (k > 0) {
    if (k & 1U) acc = star(acc, base);
    k >>= 1U;
    if (k > 0) base = star(base, base);
  }
  return acc;
}

std::vector<Vec> StarGroup::elements() const {
  const FqField& F = *algebra_->field();
  const auto& basis = nil_.basis();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    total *= F.size();
    if (total > (1U << 20)) throw InvalidInput("star group too large to enumerate");
  }
  std::vector<Vec> out;
  for (std::uint64_t n = 0; n < total; ++n) {
    Vec v = algebra_->zero();
    std::uint64_t t = n;
    for (const auto& b : basis) {
      vec_axpy(F, Fq{static_cast<std::uint32_t>(t % F.size())}, b, v);
      t /= F.size();
    }
    out.push_back(std::move(v));
  }
  return out;
}

StarGroup mu_pinfty_group(AlgebraPtr algebra, const BivariateLaw& law) {
  if (!law.polar_degrees) throw LawNotPolar("law has a monomial of degree not 1 mod p-1");
  return StarGroup(std::move(algebra), law);
}

std::vector<std::uint64_t> abelian_invariants(unsigned p, const std::vector<std::uint64_t>& element_orders) {
  // n[k] = #{g : p^k g = 0}; the number of cyclic factors of order >= p^k
  // is log_p(n[k] / n[k-1]).
  std::vector<std::uint64_t> n{0};
  std::uint64_t pk = 1;
  while (true) {
    std::uint64_t c = 0;
    for (auto o : element_orders) {
      if (pk % o == 0) ++c;
    }
    n.push_back(c);
    if (c == element_orders.size()) break;
    pk *= p;
  }
  std::vector<std::uint64_t> at_least;  // at_least[k-1]: factors of order >= p^k
  for (std::size_t k = 2; k < n.size(); ++k) {
    std::uint64_t ratio = n[k] / n[k - 1], d = 0;
    while (ratio > 1) {
      ratio /= p;
      ++d;
    }
    at_least.push_back(d);
  }
  std::vector<std::uint64_t> inv;
  std::uint64_t order = 1;
  std::vector<std::uint64_t> orders;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    order *= p;
    orders.push_back(order);
  }
  for (std::size_t k = at_least.size(); k-- > 0;) {
    std::uint64_t exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    for (std::uint64_t i = 0; i < exact; ++i) inv.push_back(orders[k]);
  }
  return inv;
}

GroupSummary summarize(const StarGroup& G) {
  const unsigned p = G.algebra()->p();
  std::vector<Vec> E = G.elements();
  std::map<Vec, std::size_t> index;
  for (std::size_t i = 0; i < E.size(); ++i) index.emplace(E[i], i);
  const std::size_t n = E.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(G.star(E[i], E[j]));
      if (it == index.end()) throw InternalInvariant("star product left the nilradical");
      table[i * n + j] = it->second;
    }
  }
  GroupSummary s;
  s.order = n;
  s.abelian = true;
  for (std::size_t i = 0; i < n && s.abelian; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (table[i * n + j] != table[j * n + i]) {
        s.abelian = false;
        break;
      }
    }
  }
  s.associative = true;
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return table[table[a * n + b] * n + c] == table[a * n + table[b * n + c]];
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n && s.associative; ++a) {
      for (std::size_t b = 0; b < n && s.associative; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!assoc(a, b, c)) {
            s.associative = false;
            break;
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 20000 && s.associative; ++t) s.associative = assoc(pick(rng), pick(rng), pick(rng));
  }
  // Element 0 is the zero vector, the identity.
  std::vector<std::uint64_t> orders;
  s.p_group = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t o = 1;
    std::size_t cur = i;
    while (cur != 0 && o <= n) {
      cur = table[cur * n + i];
      ++o;
    }
    std::uint64_t t = o;
    while (t % p == 0) t /= p;
    if (t != 1) s.p_group = false;
    orders.push_back(o);
  }
  if (s.abelian && s.p_group) s.invariants = abelian_invariants(p, orders);
  return s;
}

}  // namespace wittpolar
