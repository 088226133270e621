#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wittpolar/error.hpp"

namespace wittpolar {

using Integer = mpz_class;
// mpq_class keeps every value canonical (lowest terms, positive denominator).
using Rational = mpq_class;

using Exponents = std::vector<std::uint32_t>;

// Predicate deciding whether a monomial survives a truncation. Products and
// powers computed under a filter drop rejected terms as soon as they appear,
// so the filter must describe a monomial ideal (closed under multiplication
// by any monomial) for the result to be the image in the quotient ring.
using TermFilter = std::function<bool(const Exponents&)>;

/// Multivariate polynomial with exact rational coefficients over a fixed
/// number of variables. Terms are kept in lexicographic exponent order and
/// zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(Exponents exps, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_integral() const;

  // Adds c * x^exps to the polynomial.
  void add_term(const Exponents& exps, const Rational& c);
  Rational coefficient(const Exponents& exps) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly scaled(const Rational& c) const;

  MultiPoly mul(const MultiPoly& other, const TermFilter& keep = {}) const;
  MultiPoly pow(std::uint64_t e, const TermFilter& keep = {}) const;
  MultiPoly filtered(const TermFilter& keep) const;

  // Total degree of a monomial restricted to variables flagged in mask.
  static std::uint64_t block_degree(const Exponents& exps, const std::vector<bool>& mask);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

enum class PolyOp { add, sub, mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

// Replaces every variable v of f by bindings.at(v). All bindings must live
// in the same variable universe; a variable occurring in f without a binding
// raises UnboundVariable.
MultiPoly poly_substitute(const MultiPoly& f, const std::map<std::size_t, MultiPoly>& bindings,
                          const TermFilter& keep = {});

// Divides every coefficient by n. Throws IntegralityViolation unless every
// coefficient of f is an integer divisible by n.
MultiPoly exact_div_int(const MultiPoly& f, const Integer& n);

// Reduces an integral polynomial coefficientwise modulo p; terms that vanish
// are dropped. Coefficients are returned in [0, p).
std::map<Exponents, std::uint32_t> reduce_coefficients_mod(const MultiPoly& f, std::uint32_t p);

std::string to_string(const MultiPoly& f, std::span<const std::string> names);

/// Truncated univariate power series c_0 + c_1 x + ... + c_D x^D.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t precision);
  TruncSeries(std::size_t precision, std::vector<Rational> coeffs);

  static TruncSeries identity(std::size_t precision);

  std::size_t precision() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  TruncSeries operator+(const TruncSeries& other) const;
  TruncSeries operator-(const TruncSeries& other) const;
  TruncSeries operator*(const TruncSeries& other) const;

  // f(g(x)); requires g(0) = 0.
  TruncSeries compose(const TruncSeries& inner) const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

// Compositional inverse g with f(g(x)) = x mod x^{D+1}. Requires f(0) = 0 and
// f'(0) = 1.
TruncSeries series_reverse(const TruncSeries& f);

}  // namespace wittpolar
