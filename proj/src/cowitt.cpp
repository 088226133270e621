#include "wittpolar/cowitt.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace wittpolar {

CoWittElement::CoWittElement(AlgebraPtr algebra, Vec tail, Exceptions exceptions,
                             std::pair<unsigned, unsigned> witness)
    : algebra_(std::move(algebra)), tail_(std::move(tail)), witness_(witness) {
  if (!algebra_) throw InvalidInput("co-Witt vector needs an algebra");
  if (tail_.size() != algebra_->dim()) throw InvalidInput("tail value has wrong dimension");
  for (auto& [i, v] : exceptions) {
    if (i > 0) throw InvalidInput("co-Witt indices are nonpositive, got " + std::to_string(i));
    if (v.size() != algebra_->dim()) throw InvalidInput("co-Witt entry has wrong dimension");
    if (v != tail_) exceptions_.emplace(i, std::move(v));
  }
}

CoWittElement CoWittElement::zero(AlgebraPtr algebra) {
  Vec z = algebra->zero();
  return CoWittElement(std::move(algebra), std::move(z), {}, {0, 0});
}

const Vec& CoWittElement::at(long i) const {
  if (i > 0) throw InvalidInput("co-Witt indices are nonpositive");
  auto it = exceptions_.find(i);
  return it == exceptions_.end() ? tail_ : it->second;
}

PolarIdeal deep_ideal(const CoWittElement& x, unsigned r) {
  std::vector<Vec> gens{x.tail()};
  for (const auto& [i, v] : x.exceptions()) {
    if (i <= -static_cast<long>(r)) gens.push_back(v);
  }
  return ideal_generated(*x.algebra(), gens);
}

bool witness_holds(const CoWittElement& x, std::pair<unsigned, unsigned> witness) {
  return ideal_power_nilpotent(*x.algebra(), deep_ideal(x, witness.first), witness.second);
}

Validation cw_validate(const CoWittElement& x) {
  if (witness_holds(x, x.witness())) {
    // Still look for a smaller witness, but the stored one is a valid answer.
    Validation v{true, x.witness()};
    const auto [r0, s0] = x.witness();
    for (unsigned t = 0; t < r0 + s0; ++t) {
      for (unsigned r = 0; r <= t; ++r) {
        if (witness_holds(x, {r, t - r})) return Validation{true, std::make_pair(r, t - r)};
      }
    }
    return v;
  }
  const auto rmax = static_cast<unsigned>(x.depth() + 1);
  const auto smax = static_cast<unsigned>(x.algebra()->dim() + 1);
  for (unsigned t = 0; t <= rmax + smax; ++t) {
    for (unsigned r = 0; r <= std::min(t, rmax); ++r) {
      if (t - r <= smax && witness_holds(x, {r, t - r})) return Validation{true, std::make_pair(r, t - r)};
    }
  }
  return Validation{false, std::nullopt};
}

namespace {

void check_same(const CoWittElement& x, const CoWittElement& y) {
  const auto& A = *x.algebra();
  const auto& B = *y.algebra();
  if (&A != &B && !(A.dim() == B.dim() && *A.field() == *B.field() && A.structure() == B.structure())) {
    throw InvalidInput("co-Witt vectors over different algebras");
  }
}

CoWittElement tightened(CoWittElement x) {
  auto v = cw_validate(x);
  if (v.witness) x.set_witness(*v.witness);
  return x;
}

const ModPPoly& reduced_truncated_sum(unsigned p, std::size_t m, const std::vector<bool>& mask, unsigned K) {
  using Key = std::tuple<unsigned, std::size_t, std::vector<bool>, unsigned>;
  static std::mutex mutex;
  static std::map<Key, ModPPoly> cache;
  Key key{p, m, mask, K};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ModPPoly red = reduce_mod_p(truncated_sum_poly(p, m, mask, K), p);
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(red)).first->second;
}

struct SumContext {
  const CoWittElement& x;
  const CoWittElement& y;
  PolarIdeal ideal;
  unsigned K;

  Vec window_sum(long n, unsigned m) const {
    const auto& A = *x.algebra();
    std::vector<Vec> vals;
    std::vector<bool> mask;
    for (const CoWittElement* z : {&x, &y}) {
      for (unsigned j = 0; j <= m; ++j) {
        const Vec& v = z->at(-n - static_cast<long>(m) + static_cast<long>(j));
        mask.push_back(ideal.contains(A, v));
        vals.push_back(v);
      }
    }
    const ModPPoly& poly = reduced_truncated_sum(A.p(), m, mask, K);
    return evaluate_polys(A, {poly}, vals).front();
  }
};

SumContext make_context(const CoWittElement& x, const CoWittElement& y, unsigned r) {
  std::vector<Vec> gens{x.tail(), y.tail()};
  for (const CoWittElement* z : {&x, &y}) {
    for (const auto& [i, v] : z->exceptions()) {
      if (i <= -static_cast<long>(r)) gens.push_back(v);
    }
  }
  PolarIdeal I = ideal_generated(*x.algebra(), gens);
  auto K = vanishing_index(*x.algebra(), I);
  if (!K) throw InvalidInput("the deep ideal of the inputs is not nilpotent; are they valid co-Witt vectors?");
  return SumContext{x, y, std::move(I), *K};
}

}  // namespace

std::vector<Vec> cw_sum_sequence(const CoWittElement& x, const CoWittElement& y, long n, unsigned max_m) {
  check_same(x, y);
  const unsigned r = std::max(x.witness().first, y.witness().first);
  SumContext ctx = make_context(x, y, r);
  std::vector<Vec> out;
  for (unsigned m = 0; m <= max_m; ++m) out.push_back(ctx.window_sum(n, m));
  return out;
}

CoWittElement cw_add(const CoWittElement& x, const CoWittElement& y, const CwAddOptions& opts) {
  check_same(x, y);
  const auto& A = *x.algebra();
  const unsigned d = static_cast<unsigned>(A.dim());
  const unsigned r = std::max(x.witness().first, y.witness().first);
  const unsigned s = std::max(x.witness().second, y.witness().second);
  const unsigned repeats = opts.repeats != 0 ? opts.repeats : d + 2;
  const unsigned cap = opts.cap != 0 ? opts.cap : std::max(16U, 4 * (r + s) * d);
  SumContext ctx = make_context(x, y, r);

  auto limit = [&](long n) {
    Vec last;
    unsigned run = 0;
    for (unsigned m = 0; m <= cap; ++m) {
      Vec v = ctx.window_sum(n, m);
      run = (m > 0 && v == last) ? run + 1 : 1;
      if (run >= repeats) return v;
      last = std::move(v);
    }
    throw StabilizationNotDetected(static_cast<int>(-n), cap);
  };

  // Beyond every exception the windows see only tails, so one limit serves
  // all deeper indices.
  const long n_tail = std::max(x.depth(), y.depth()) + 1;
  Vec tail = limit(n_tail);
  CoWittElement::Exceptions exc;
  for (long n = 0; n < n_tail; ++n) {
    Vec v = limit(n);
    if (v != tail) exc.emplace(-n, std::move(v));
  }
  CoWittElement sum(x.algebra(), std::move(tail), std::move(exc), {r, 2 * s + 1});
  auto v = cw_validate(sum);
  if (!v.valid) throw InternalInvariant("sum of valid co-Witt vectors failed validation");
  sum.set_witness(*v.witness);
  return sum;
}

CoWittElement cw_multiple(unsigned k, const CoWittElement& x, const CwAddOptions& opts) {
  CoWittElement acc = CoWittElement::zero(x.algebra());
  for (unsigned i = 0; i < k; ++i) acc = cw_add(acc, x, opts);
  return acc;
}

CoWittElement cw_F(const CoWittElement& x) {
  const auto& A = *x.algebra();
  CoWittElement::Exceptions exc;
  for (const auto& [i, v] : x.exceptions()) exc.emplace(i, p_power(A, v));
  return tightened(CoWittElement(x.algebra(), p_power(A, x.tail()), std::move(exc), x.witness()));
}

CoWittElement cw_V(const CoWittElement& x) {
  CoWittElement::Exceptions exc;
  for (const auto& [i, v] : x.exceptions()) {
    if (i < 0) exc.emplace(i + 1, v);
  }
  auto [r, s] = x.witness();
  return tightened(CoWittElement(x.algebra(), x.tail(), std::move(exc), {r > 0 ? r - 1 : 0, s}));
}

CoWittElement cw_from_cwu(const CwuClass& c) {
  CoWittElement::Exceptions exc;
  const long L = static_cast<long>(c.length());
  for (long j = 0; j < L; ++j) exc.emplace(-(L - 1 - j), c.coords()[static_cast<std::size_t>(j)]);
  return tightened(
      CoWittElement(c.algebra(), c.algebra()->zero(), std::move(exc), {static_cast<unsigned>(L), 0}));
}

CwuClass cwu_from_cw(const CoWittElement& x) {
  if (!vec_is_zero(x.tail())) throw InvalidInput("only co-Witt vectors with zero tail lie in CW^u");
  const long L = x.depth() + 1;
  std::vector<Vec> coords;
  for (long j = 0; j < L; ++j) coords.push_back(x.at(-(L - 1 - j)));
  return CwuClass(x.algebra(), std::move(coords));
}

}  // namespace wittpolar
