#include "wittpolar/wittmod.hpp"

#include <algorithm>
#include <string>

namespace wittpolar {

namespace {

void check_coords(const PPolarAlgebra& A, const std::vector<Vec>& coords) {
  for (const auto& c : coords) {
    if (c.size() != A.dim()) throw InvalidInput("Witt coordinate has wrong dimension");
  }
}

void check_compatible(const WittVector& x, const WittVector& y) {
  if (x.algebra() != y.algebra() && !(*x.algebra()->field() == *y.algebra()->field() &&
                                      x.algebra()->structure() == y.algebra()->structure() &&
                                      x.algebra()->dim() == y.algebra()->dim())) {
    throw InvalidInput("Witt vectors over different algebras");
  }
  if (x.length() != y.length()) {
    throw InvalidInput("Witt vector length mismatch (" + std::to_string(x.length()) + " vs " +
                       std::to_string(y.length()) + ")");
  }
}

}  // namespace

WittVector::WittVector(AlgebraPtr algebra, std::vector<Vec> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) throw InvalidInput("Witt vector needs an algebra");
  if (coords_.empty()) throw InvalidInput("Witt vector length must be at least 1");
  check_coords(*algebra_, coords_);
}

WittVector WittVector::zero(AlgebraPtr algebra, std::size_t n) {
  const std::size_t d = algebra->dim();
  return WittVector(std::move(algebra), std::vector<Vec>(n, vec_zero(d)));
}

bool WittVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Vec& v) { return vec_is_zero(v); });
}

AlgebraPtr polarized_field(FieldPtr field, unsigned p) {
  std::map<PPolarAlgebra::Key, Vec> mu;
  mu.emplace(PPolarAlgebra::Key(p, 0), Vec{field->one()});
  return std::make_shared<const PPolarAlgebra>(std::move(field), p, 1, std::move(mu));
}

std::vector<Vec> evaluate_polys(const PPolarAlgebra& A, const std::vector<ModPPoly>& polys,
                                std::span<const Vec> polar, std::span<const Fq> scalars) {
  const FqField& F = *A.field();
  const std::size_t np = polar.size();
  std::vector<Vec> out;
  std::vector<Vec> factors;
  for (const auto& f : polys) {
    if (f.nvars != np + scalars.size()) throw InvalidInput("polynomial arity does not match the inputs");
    Vec acc = A.zero();
    for (const auto& [e, c] : f.terms) {
      Fq coef = F.from_int(c);
      factors.clear();
      bool vanishes = false;
      for (std::size_t v = 0; v < np && !vanishes; ++v) {
        if (e[v] == 0) continue;
        if (vec_is_zero(polar[v])) vanishes = true;
        for (std::uint32_t k = 0; k < e[v]; ++k) factors.push_back(polar[v]);
      }
      for (std::size_t v = np; v < f.nvars && !vanishes; ++v) {
        if (e[v] != 0) coef = F.mul(coef, F.pow(scalars[v - np], e[v]));
      }
      if (vanishes || coef.v == 0) continue;
      if (factors.empty()) throw InternalInvariant("universal monomial without polar factors");
      vec_axpy(F, coef, mu_eval(A, factors), acc);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

WittVector w_add(const WittVector& x, const WittVector& y) {
  check_compatible(x, y);
  const auto& A = *x.algebra();
  auto polys = reduced_universal_polys(A.p(), x.length(), WittKind::sum);
  std::vector<Vec> vals(x.coords());
  vals.insert(vals.end(), y.coords().begin(), y.coords().end());
  return WittVector(x.algebra(), evaluate_polys(A, *polys, vals));
}

WittVector w_neg(const WittVector& x) {
  const auto& A = *x.algebra();
  auto polys = reduced_universal_polys(A.p(), x.length(), WittKind::neg);
  std::vector<Vec> vals(x.coords());
  vals.resize(2 * x.length(), A.zero());
  return WittVector(x.algebra(), evaluate_polys(A, *polys, vals));
}

WittVector w_sub(const WittVector& x, const WittVector& y) { return w_add(x, w_neg(y)); }

WittVector w_multiple(long k, const WittVector& x) {
  WittVector base = k < 0 ? w_neg(x) : x;
  unsigned long e = k < 0 ? 0UL - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  WittVector acc = WittVector::zero(x.algebra(), x.length());
  while (e > 0) {
    if (e & 1UL) acc = w_add(acc, base);
    e >>= 1U;
    if (e > 0) base = w_add(base, base);
  }
  return acc;
}

WittVector w_product(std::span<const WittVector> xs) {
  if (xs.empty()) throw InvalidInput("w_product needs p factors");
  const auto& A = *xs[0].algebra();
  if (xs.size() != A.p()) {
    throw InvalidInput("w_product needs exactly p = " + std::to_string(A.p()) + " factors, got " +
                       std::to_string(xs.size()));
  }
  std::vector<Vec> vals;
  for (const auto& x : xs) {
    check_compatible(xs[0], x);
    vals.insert(vals.end(), x.coords().begin(), x.coords().end());
  }
  auto polys = reduced_universal_polys(A.p(), xs[0].length(), WittKind::prod);
  return WittVector(xs[0].algebra(), evaluate_polys(A, *polys, vals));
}

WittVector teichmuller(AlgebraPtr algebra, const Vec& a, std::size_t n) {
  WittVector z = WittVector::zero(algebra, n);
  std::vector<Vec> c = z.coords();
  c[0] = a;
  return WittVector(std::move(algebra), std::move(c));
}

WittVector verschiebung(const WittVector& x) {
  std::vector<Vec> c;
  c.push_back(x.algebra()->zero());
  c.insert(c.end(), x.coords().begin(), x.coords().end());
  return WittVector(x.algebra(), std::move(c));
}

WittVector frobenius_charp(const WittVector& x) {
  if (x.length() < 2) throw InvalidInput("Frobenius maps W_{n+1} to W_n and needs length >= 2");
  std::vector<Vec> c;
  for (std::size_t i = 0; i + 1 < x.length(); ++i) c.push_back(p_power(*x.algebra(), x[i]));
  return WittVector(x.algebra(), std::move(c));
}

WittVector frobenius_by_polys(const WittVector& x) {
  if (x.length() < 2) throw InvalidInput("Frobenius maps W_{n+1} to W_n and needs length >= 2");
  const auto& A = *x.algebra();
  auto polys = reduced_universal_polys(A.p(), x.length() - 1, WittKind::frob);
  return WittVector(x.algebra(), evaluate_polys(A, *polys, x.coords()));
}

WittVector truncate(const WittVector& x, std::size_t n) {
  if (n < 1 || n > x.length()) throw InvalidInput("bad truncation length");
  return WittVector(x.algebra(), std::vector<Vec>(x.coords().begin(), x.coords().begin() + static_cast<std::ptrdiff_t>(n)));
}

WittVector scalar_mul(const WittVector& a, const WittVector& x) {
  const auto& A = *x.algebra();
  if (a.algebra()->dim() != 1 || !(*a.algebra()->field() == *A.field())) {
    throw InvalidInput("scalars live in W_n of the polarized base field");
  }
  if (a.length() != x.length()) throw InvalidInput("scalar and vector lengths differ");
  std::vector<Fq> scal;
  for (const auto& c : a.coords()) scal.push_back(c[0]);
  auto polys = reduced_universal_polys(A.p(), x.length(), WittKind::scalar);
  return WittVector(x.algebra(), evaluate_polys(A, *polys, x.coords(), scal));
}

WittVector scalar_frobenius(const WittVector& a, std::int64_t k) {
  const FqField& F = *a.algebra()->field();
  std::vector<Vec> c;
  for (const auto& v : a.coords()) c.push_back(vec_frobenius(F, v, k));
  return WittVector(a.algebra(), std::move(c));
}

WittVector witt_map(const FqMatrix& M, AlgebraPtr target, const WittVector& x) {
  if (M.cols() != x.algebra()->dim() || M.rows() != target->dim()) throw InvalidInput("matrix shape mismatch");
  std::vector<Vec> c;
  for (const auto& v : x.coords()) c.push_back(M.apply(*target->field(), v));
  return WittVector(std::move(target), std::move(c));
}

CwuClass::CwuClass(AlgebraPtr algebra, std::vector<Vec> coords) : algebra_(std::move(algebra)) {
  if (!algebra_) throw InvalidInput("CW^u class needs an algebra");
  check_coords(*algebra_, coords);
  auto first = std::find_if(coords.begin(), coords.end(), [](const Vec& v) { return !vec_is_zero(v); });
  coords_.assign(first, coords.end());
}

WittVector CwuClass::representative(std::size_t n) const {
  if (n < coords_.size() || n == 0) throw InvalidInput("representative length too short");
  std::vector<Vec> c(n - coords_.size(), algebra_->zero());
  c.insert(c.end(), coords_.begin(), coords_.end());
  return WittVector(algebra_, std::move(c));
}

CwuClass cwu_class(const WittVector& x) { return CwuClass(x.algebra(), x.coords()); }

CwuClass cwu_add(const CwuClass& a, const CwuClass& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::size_t n = std::max(a.length(), b.length());
  return cwu_class(w_add(a.representative(n), b.representative(n)));
}

CwuClass cwu_neg(const CwuClass& a) {
  if (a.is_zero()) return a;
  return cwu_class(w_neg(a.representative(a.length())));
}

CwuClass cwu_F(const CwuClass& a) {
  std::vector<Vec> c;
  for (const auto& v : a.coords()) c.push_back(p_power(*a.algebra(), v));
  return CwuClass(a.algebra(), std::move(c));
}

CwuClass cwu_V(const CwuClass& a) {
  if (a.is_zero()) return a;
  std::vector<Vec> c(a.coords().begin(), a.coords().end() - 1);
  return CwuClass(a.algebra(), std::move(c));
}

}  // namespace wittpolar
