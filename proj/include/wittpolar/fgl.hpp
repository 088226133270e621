#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wittpolar/exact.hpp"
#include "wittpolar/ppolar.hpp"

namespace wittpolar {

/// log(x) = sum_i l_i x^{p^i} truncated at degree D, l_0 = 1.
struct PTypicalLog {
  unsigned p = 0;
  std::size_t precision = 0;
  std::vector<Rational> l;  // l[i] for p^i <= precision

  TruncSeries series() const;
};

// Keeps the x^{p^i} coefficients of f; f(0) = 0 and f'(0) = 1 required.
PTypicalLog typicalize_log(const TruncSeries& f, unsigned p);
// From explicit coefficients l_0 = 1, l_1, ...; extra coefficients beyond
// the precision are rejected.
PTypicalLog make_log(unsigned p, std::size_t precision, std::vector<Rational> l);
// log(1 + x) to precision D.
TruncSeries log_one_plus(std::size_t precision);

TruncSeries exp_from_log(const PTypicalLog& log);

struct SupportReport {
  bool ok = true;
  std::vector<std::size_t> offenders;
};

// Every nonzero exponent must be 1 mod (p-1).
SupportReport support_check(const TruncSeries& s, unsigned p);

/// F(x, y) = sum F_ab x^a y^b, a + b <= D.
struct BivariateLaw {
  unsigned p = 0;
  std::size_t precision = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> terms;
  bool unit_ok = false;
  bool symmetric = false;
  bool polar_degrees = false;  // a + b = 1 mod (p-1) for every term

  Rational coefficient(std::uint32_t a, std::uint32_t b) const;
};

BivariateLaw group_law(const PTypicalLog& log, std::size_t precision);
// F(F(x,y),z) = F(x,F(y,z)) up to total degree D.
bool associativity_check(const BivariateLaw& law, std::size_t precision);
// Terms whose coefficient has p in the denominator.
std::vector<std::pair<std::uint32_t, std::uint32_t>> non_integral_terms(const BivariateLaw& law);
std::vector<std::size_t> non_integral_terms(const TruncSeries& s, unsigned p);

// exp_F(log(1 + x)): the change of coordinates from the multiplicative law.
TruncSeries multiplicative_coordinate(const PTypicalLog& log);

// Rational with denominator prime to p, reduced into F_p.
std::uint32_t reduce_rational(const Rational& c, unsigned p);

/// The group (nil(A), *) with x * y = F(x, y) evaluated through mu.
class StarGroup {
 public:
  StarGroup(AlgebraPtr algebra, const BivariateLaw& law);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const PolarIdeal& nil() const noexcept { return nil_; }
  unsigned truncation() const noexcept { return truncation_; }

  Vec star(const Vec& x, const Vec& y) const;
  Vec power(const Vec& x, std::uint64_t k) const;
  // All q^{dim nil} elements in a fixed order.
  std::vector<Vec> elements() const;

 private:
  AlgebraPtr algebra_;
  PolarIdeal nil_;
  unsigned truncation_;  // monomials with this many factors vanish
  std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Fq>> terms_;
};

// Throws LawNotPolar, LawNotIntegral or InvalidInput (precision too low).
StarGroup mu_pinfty_group(AlgebraPtr algebra, const BivariateLaw& law);

struct GroupSummary {
  std::size_t order = 0;
  bool abelian = false;
  bool associative = false;
  bool p_group = false;
  std::vector<std::uint64_t> invariants;  // cyclic factor orders, descending
};

// Full table checks; associativity over all triples.
GroupSummary summarize(const StarGroup& G);

// Invariants of a finite abelian p-group from the orders of its elements.
std::vector<std::uint64_t> abelian_invariants(unsigned p, const std::vector<std::uint64_t>& element_orders);

}  // namespace wittpolar
