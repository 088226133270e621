#include "wittpolar/exact.hpp"

#include <sstream>

namespace wittpolar {

namespace {

void check_universe(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw InvalidInput("polynomials live in different variable universes (" +
                       std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + ")");
  }
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly f(nvars);
  f.add_term(Exponents(nvars, 0), c);
  return f;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InvalidInput("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  MultiPoly f(nvars);
  f.add_term(e, Rational(1));
  return f;
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& c) {
  MultiPoly f(exps.size());
  f.add_term(exps, c);
  return f;
}

bool MultiPoly::is_integral() const {
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (exps.size() != nvars_) throw InvalidInput("exponent vector has wrong length");
  Rational c = coeff;  // callers may hand in e.g. 2/4
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_universe(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_universe(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::scaled(const Rational& coeff) const {
  Rational c = coeff;
  c.canonicalize();
  if (c == 0) return MultiPoly(nvars_);
  MultiPoly r(*this);
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

MultiPoly MultiPoly::mul(const MultiPoly& other, const TermFilter& keep) const {
  check_universe(*this, other);
  MultiPoly r(nvars_);
  Exponents e(nvars_);
  Rational prod;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      if (keep && !keep(e)) continue;
      prod = ca * cb;
      r.add_term(e, prod);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(std::uint64_t e, const TermFilter& keep) const {
  MultiPoly result = constant(nvars_, Rational(1)).filtered(keep);
  MultiPoly base = filtered(keep);
  while (e > 0) {
    if (e & 1U) result = result.mul(base, keep);
    e >>= 1U;
    if (e > 0) base = base.mul(base, keep);
  }
  return result;
}

MultiPoly MultiPoly::filtered(const TermFilter& keep) const {
  if (!keep) return *this;
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (keep(e)) r.terms_.emplace(e, c);
  }
  return r;
}

std::uint64_t MultiPoly::block_degree(const Exponents& exps, const std::vector<bool>& mask) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (mask.at(i)) d += exps[i];
  }
  return d;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return a.mul(b); }

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw InvalidInput("unknown polynomial operation");
}

MultiPoly poly_substitute(const MultiPoly& f, const std::map<std::size_t, MultiPoly>& bindings,
                          const TermFilter& keep) {
  if (bindings.empty()) {
    if (f.is_zero()) return f;
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      for (const auto& [e, c] : f.terms()) {
        if (e[v] != 0) throw UnboundVariable(v);
      }
    }
    throw InvalidInput("substitution without bindings has no target universe");
  }
  const std::size_t target = bindings.begin()->second.nvars();
  for (const auto& [v, g] : bindings) {
    if (g.nvars() != target) throw InvalidInput("bindings live in different variable universes");
  }
  // Powers of each binding are shared across terms.
  std::map<std::pair<std::size_t, std::uint32_t>, MultiPoly> powers;
  auto power_of = [&](std::size_t v, std::uint32_t k) -> const MultiPoly& {
    auto key = std::make_pair(v, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto b = bindings.find(v);
    if (b == bindings.end()) throw UnboundVariable(v);
    return powers.emplace(key, b->second.pow(k, keep)).first->second;
  };
  MultiPoly result(target);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      term = term.mul(power_of(v, e[v]), keep);
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

MultiPoly exact_div_int(const MultiPoly& f, const Integer& n) {
  if (n == 0) throw InvalidInput("division by zero");
  MultiPoly r(f.nvars());
  Integer q;
  for (const auto& [e, c] : f.terms()) {
    if (c.get_den() != 1 || !mpz_divisible_p(c.get_num_mpz_t(), n.get_mpz_t())) {
      std::ostringstream msg;
      msg << "coefficient " << c.get_str() << " is not divisible by " << n.get_str();
      throw IntegralityViolation(msg.str());
    }
    mpz_divexact(q.get_mpz_t(), c.get_num_mpz_t(), n.get_mpz_t());
    r.add_term(e, Rational(q));
  }
  return r;
}

std::map<Exponents, std::uint32_t> reduce_coefficients_mod(const MultiPoly& f, std::uint32_t p) {
  std::map<Exponents, std::uint32_t> out;
  Integer r;
  for (const auto& [e, c] : f.terms()) {
    if (c.get_den() != 1) {
      throw IntegralityViolation("cannot reduce non-integral coefficient " + c.get_str() + " mod " +
                                 std::to_string(p));
    }
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_num_mpz_t(), p);
    auto v = static_cast<std::uint32_t>(r.get_ui());
    if (v != 0) out.emplace(e, v);
  }
  return out;
}

std::string to_string(const MultiPoly& f, std::span<const std::string> names) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational a = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit_coeff = (a == 1);
    bool any_var = false;
    if (!unit_coeff) out << a.get_str();
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (any_var || !unit_coeff) out << '*';
      out << (v < names.size() ? names[v] : "v" + std::to_string(v));
      if (e[v] > 1) out << '^' << e[v];
      any_var = true;
    }
    if (unit_coeff && !any_var) out << '1';
    first = false;
  }
  return out.str();
}

TruncSeries::TruncSeries(std::size_t precision) : coeffs_(precision + 1, Rational(0)) {}

TruncSeries::TruncSeries(std::size_t precision, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(precision + 1, Rational(0));
}

TruncSeries TruncSeries::identity(std::size_t precision) {
  TruncSeries s(precision);
  if (precision >= 1) s[1] = 1;
  return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& other) const {
  if (precision() != other.precision()) throw InvalidInput("series precision mismatch");
  TruncSeries r(*this);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] += other.coeffs_[k];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& other) const {
  if (precision() != other.precision()) throw InvalidInput("series precision mismatch");
  TruncSeries r(*this);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] -= other.coeffs_[k];
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& other) const {
  if (precision() != other.precision()) throw InvalidInput("series precision mismatch");
  const std::size_t d = precision();
  TruncSeries r(d);
  for (std::size_t i = 0; i <= d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= d; ++j) {
      if (other.coeffs_[j] != 0) r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return r;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
  if (precision() != inner.precision()) throw InvalidInput("series precision mismatch");
  if (inner[0] != 0) throw InvalidInput("inner series must vanish at 0");
  // Horner: f(g) = c_0 + g (c_1 + g (c_2 + ...)).
  const std::size_t d = precision();
  TruncSeries acc(d);
  for (std::size_t k = d + 1; k-- > 0;) {
    acc = acc * inner;
    acc[0] += coeffs_[k];
  }
  return acc;
}

TruncSeries series_reverse(const TruncSeries& f) {
  const std::size_t d = f.precision();
  if (d < 1 || f[0] != 0 || f[1] != 1) {
    throw InvalidInput("series_reverse needs f(0) = 0 and f'(0) = 1");
  }
  // Solve for g term by term: the coefficient of x^k in f(g) is g_k plus
  // terms involving only g_1..g_{k-1}.
  TruncSeries g = TruncSeries::identity(d);
  for (std::size_t k = 2; k <= d; ++k) {
    TruncSeries composed = f.compose(g);
    g[k] -= composed[k];
  }
  return g;
}

}  // namespace wittpolar
