#include "wittpolar/gfq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace wittpolar {

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients over F_p

constexpr std::uint64_t kTableLimit = 256;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^{p-2} works.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1U) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly digits(std::uint64_t v, std::uint32_t p, std::uint32_t m) {
  Poly d(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p, std::uint32_t m) {
  std::uint64_t v = 0;
  for (std::uint32_t i = std::min<std::size_t>(d.size(), m); i-- > 0;) v = v * p + d[i];
  return static_cast<std::uint32_t>(v);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // f is irreducible iff gcd(x^{p^i} - x, f) = 1 for 1 <= i <= deg/2.
  Poly h = poly_mod(Poly{0, 1}, f, p);
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    // h <- h^p mod f
    Poly acc{1};
    Poly base = h;
    for (std::uint32_t e = p; e > 0; e >>= 1U) {
      if (e & 1U) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    h = acc;
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

FieldPtr FqField::build(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (m == 0) throw InvalidInput("extension degree must be positive");
  double bits = m * std::log2(static_cast<double>(p));
  if (bits >= 31.0) {
    throw ExtensionCapExceeded("F_" + std::to_string(p) + "^" + std::to_string(m) +
                               " exceeds the supported field size");
  }
  if (m == 1) return FieldPtr(new FqField(p, {0, 1}));
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  // Index N = sum c_i p^i orders candidates by their top coefficient first.
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly f = digits(n, p, m);
    if (f[0] == 0) continue;
    f.push_back(1);
    if (is_irreducible(p, f)) return FieldPtr(new FqField(p, std::move(f)));
  }
  throw InternalInvariant("no irreducible polynomial found");
}

FieldPtr FqField::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) throw InvalidInput("modulus must be monic of degree >= 1");
  for (auto c : modulus) {
    if (c >= p) throw InvalidInput("modulus coefficients must lie in [0, p)");
  }
  if (modulus.size() == 2) {
    if (modulus[0] != 0) throw InvalidInput("prime fields use the modulus t");
  } else if (!is_irreducible(p, modulus)) {
    throw InvalidInput("modulus is reducible");
  }
  return FieldPtr(new FqField(p, std::move(modulus)));
}

FqField::FqField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), m_(static_cast<std::uint32_t>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;
  if (q_ <= kTableLimit && m_ > 1) {
    mul_table_.resize(q_ * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) mul_table_[a * q_ + b] = mul_slow(Fq{a}, Fq{b}).v;
    }
  }
}

Fq FqField::generator() const { return m_ == 1 ? Fq{0} : Fq{p_}; }

Fq FqField::from_int(std::int64_t c) const {
  std::int64_t r = c % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fq{static_cast<std::uint32_t>(r)};
}

Fq FqField::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() > m_) throw InvalidInput("too many coordinates for field element");
  Poly d(coords.begin(), coords.end());
  for (auto& c : d) {
    if (c >= p_) throw InvalidInput("field coordinate out of range");
  }
  return Fq{undigits(d, p_, m_)};
}

std::vector<std::uint32_t> FqField::coords(Fq a) const { return digits(a.v, p_, m_); }

Fq FqField::add(Fq a, Fq b) const {
  if (p_ == 2) return Fq{a.v ^ b.v};
  if (m_ == 1) return Fq{(a.v + b.v) % p_};
  std::uint32_t r = 0, scale = 1;
  std::uint32_t x = a.v, y = b.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Fq{r};
}

Fq FqField::neg(Fq a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return Fq{(p_ - a.v) % p_};
  std::uint32_t r = 0, scale = 1, x = a.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return Fq{r};
}

Fq FqField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FqField::mul(Fq a, Fq b) const {
  if (m_ == 1) return Fq{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
  if (!mul_table_.empty()) return Fq{mul_table_[a.v * q_ + b.v]};
  return mul_slow(a, b);
}

Fq FqField::mul_slow(Fq a, Fq b) const {
  if (a.v == 0 || b.v == 0) return Fq{0};
  Poly r = poly_mulmod(digits(a.v, p_, m_), digits(b.v, p_, m_), modulus_, p_);
  return Fq{undigits(r, p_, m_)};
}

Fq FqField::pow(Fq a, std::uint64_t e) const {
  Fq r = one();
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    e >>= 1U;
    if (e > 0) a = mul(a, a);
  }
  return r;
}

Fq FqField::inv(Fq a) const {
  if (a.v == 0) throw InvalidInput("inverse of zero");
  return pow(a, q_ - 2);
}

Fq FqField::frobenius(Fq a, std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(m_);
  if (r < 0) r += m_;
  for (std::int64_t i = 0; i < r; ++i) a = pow(a, p_);
  return a;
}

FieldEmbedding::FieldEmbedding(FieldPtr small, FieldPtr big, Fq image)
    : small_(std::move(small)), big_(std::move(big)), image_(image) {}

FieldEmbedding::FieldEmbedding(FieldPtr small, FieldPtr big)
    : small_(std::move(small)), big_(std::move(big)) {
  if (small_->characteristic() != big_->characteristic() || big_->degree() % small_->degree() != 0) {
    throw InvalidInput("no embedding between these fields");
  }
  const std::uint32_t p = small_->characteristic();
  const std::uint32_t m = small_->degree();
  if (m == 1) {
    image_ = Fq{0};
    return;
  }
  // The copy of F_{p^m} inside the big field is the kernel of x -> x^{p^m} - x.
  FqMatrix one(1, 1), minus_one(1, 1);
  one.at(0, 0) = big_->one();
  minus_one.at(0, 0) = big_->neg(big_->one());
  std::vector<SemilinearTerm> terms{{static_cast<std::int64_t>(m), one}, {0, minus_one}};
  std::vector<Vec> basis = additive_map_kernel(*big_, terms, 1);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) count *= p;
  std::optional<Fq> best;
  const auto& f = small_->modulus();
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    Fq x = big_->zero();
    std::uint64_t t = idx;
    for (const auto& b : basis) {
      Fq c = big_->from_int(static_cast<std::int64_t>(t % p));
      t /= p;
      x = big_->add(x, big_->mul(c, b[0]));
    }
    Fq val = big_->zero();
    for (std::size_t i = f.size(); i-- > 0;) {
      val = big_->add(big_->mul(val, x), big_->from_int(f[i]));
    }
    if (val.v == 0 && (!best || x < *best)) best = x;
  }
  if (!best) throw InternalInvariant("modulus has no root in the extension field");
  image_ = *best;
}

FieldEmbedding FieldEmbedding::identity(FieldPtr field) {
  Fq g = field->degree() == 1 ? Fq{0} : field->generator();
  return FieldEmbedding(field, field, g);
}

Fq FieldEmbedding::operator()(Fq a) const {
  if (small_->degree() == 1) return Fq{a.v};
  auto c = small_->coords(a);
  Fq r = big_->zero();
  for (std::size_t i = c.size(); i-- > 0;) {
    r = big_->add(big_->mul(r, image_), big_->from_int(c[i]));
  }
  return r;
}

Vec FieldEmbedding::operator()(std::span<const Fq> v) const {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = (*this)(v[i]);
  return r;
}

FieldEmbedding FieldEmbedding::then(const FieldEmbedding& next) const {
  if (!(*next.small_ == *big_)) throw InvalidInput("embeddings are not composable");
  return FieldEmbedding(small_, next.big_, next(image_));
}

Vec vec_zero(std::size_t n) { return Vec(n, Fq{0}); }

Vec vec_add(const FqField& F, std::span<const Fq> a, std::span<const Fq> b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const FqField& F, std::span<const Fq> a, std::span<const Fq> b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const FqField& F, Fq c, std::span<const Fq> a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  return r;
}

void vec_axpy(const FqField& F, Fq c, std::span<const Fq> x, std::span<Fq> y) {
  if (c.v == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].v != 0) y[i] = F.add(y[i], F.mul(c, x[i]));
  }
}

Vec vec_frobenius(const FqField& F, std::span<const Fq> a, std::int64_t k) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.frobenius(a[i], k);
  return r;
}

bool vec_is_zero(std::span<const Fq> a) {
  return std::all_of(a.begin(), a.end(), [](Fq x) { return x.v == 0; });
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec r(n);
  r.at(i) = Fq{1};
  return r;
}

FqMatrix FqMatrix::identity(std::size_t n) {
  FqMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i) M.at(i, i) = Fq{1};
  return M;
}

FqMatrix FqMatrix::from_rows(std::span<const Vec> rows, std::size_t cols) {
  FqMatrix M(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) M.at(r, c) = rows[r][c];
  }
  return M;
}

FqMatrix FqMatrix::from_columns(std::span<const Vec> columns, std::size_t rows) {
  FqMatrix M(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InvalidInput("ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) M.at(r, c) = columns[c][r];
  }
  return M;
}

Vec FqMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec FqMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vec FqMatrix::apply(const FqField& F, std::span<const Fq> v) const {
  if (v.size() != cols_) throw InvalidInput("matrix/vector size mismatch");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Fq acc{0};
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].v != 0 && at(r, c).v != 0) acc = F.add(acc, F.mul(at(r, c), v[c]));
    }
    out[r] = acc;
  }
  return out;
}

FqMatrix FqMatrix::mul(const FqField& F, const FqMatrix& other) const {
  if (cols_ != other.rows_) throw InvalidInput("matrix product size mismatch");
  FqMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Fq a = at(r, k);
      if (a.v == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        out.at(r, c) = F.add(out.at(r, c), F.mul(a, other.at(k, c)));
      }
    }
  }
  return out;
}

FqMatrix FqMatrix::frobenius(const FqField& F, std::int64_t k) const {
  FqMatrix out(*this);
  for (auto& x : out.data_) x = F.frobenius(x, k);
  return out;
}

std::vector<Vec> row_echelon(const FqField& F, std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t piv = lead;
    while (piv < rows.size() && rows[piv][c].v == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[lead], rows[piv]);
    Fq inv = F.inv(rows[lead][c]);
    for (auto& x : rows[lead]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c].v == 0) continue;
      Fq f = F.neg(rows[r][c]);
      vec_axpy(F, f, rows[lead], rows[r]);
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

std::size_t rank(const FqField& F, const FqMatrix& M) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < M.rows(); ++r) rows.push_back(M.row(r));
  return row_echelon(F, std::move(rows)).size();
}

namespace {

std::size_t pivot_of(const Vec& row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c].v != 0) return c;
  }
  return row.size();
}

}  // namespace

std::vector<Vec> linear_kernel(const FqField& F, const FqMatrix& M) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < M.rows(); ++r) rows.push_back(M.row(r));
  rows = row_echelon(F, std::move(rows));
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(M.cols(), false);
  for (const auto& row : rows) {
    pivots.push_back(pivot_of(row));
    is_pivot[pivots.back()] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(M.cols());
    v[f] = F.one();
    for (std::size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = F.neg(rows[r][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_in_span(const FqField& F, std::span<const Vec> basis, std::span<const Fq> v) {
  const std::size_t n = v.size();
  const std::size_t k = basis.size();
  // Augmented system [B | v] with the basis vectors as columns.
  std::vector<Vec> rows(n, Vec(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) rows[r][c] = basis[c].at(r);
    rows[r][k] = v[r];
  }
  rows = row_echelon(F, std::move(rows));
  Vec coeffs(k);
  for (const auto& row : rows) {
    std::size_t c = pivot_of(row);
    if (c == k) return std::nullopt;
    coeffs[c] = row[k];
  }
  return coeffs;
}

std::vector<Vec> additive_map_kernel(const FqField& F, std::span<const SemilinearTerm> terms, std::size_t n) {
  const std::uint32_t m = F.degree();
  const std::size_t flat = m * n;
  FieldPtr prime = FqField::build(F.characteristic(), 1);
  FqMatrix L(flat, flat);
  std::uint32_t gpow = 1;  // encodes t^i in the power basis
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec v(n);
      v[j] = Fq{gpow};
      Vec image(n);
      for (const auto& term : terms) {
        if (term.matrix.rows() != n || term.matrix.cols() != n) {
          throw InvalidInput("semilinear term has wrong shape");
        }
        Vec tv = term.matrix.apply(F, vec_frobenius(F, v, term.twist));
        image = vec_add(F, image, tv);
      }
      for (std::size_t r = 0; r < n; ++r) {
        auto c = F.coords(image[r]);
        for (std::uint32_t k = 0; k < m; ++k) L.at(r * m + k, j * m + i) = Fq{c[k]};
      }
    }
    gpow *= F.characteristic();
  }
  std::vector<Vec> flat_kernel = linear_kernel(*prime, L);
  std::vector<Vec> out;
  for (const auto& w : flat_kernel) {
    Vec v(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint32_t> c(m);
      for (std::uint32_t k = 0; k < m; ++k) c[k] = w[j * m + k].v;
      v[j] = F.from_coords(c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> semilinear_kernel(const FqField& F, const FqMatrix& M, std::int64_t twist) {
  if (M.rows() != M.cols()) throw InvalidInput("semilinear_kernel needs a square matrix");
  SemilinearTerm term{twist, M};
  return additive_map_kernel(F, std::span<const SemilinearTerm>(&term, 1), M.cols());
}

Subspace::Subspace(const FqField& F, std::size_t ambient, std::vector<Vec> generators) : ambient_(ambient) {
  for (const auto& g : generators) {
    if (g.size() != ambient) throw InvalidInput("generator has wrong dimension");
  }
  basis_ = row_echelon(F, std::move(generators));
  for (const auto& row : basis_) pivots_.push_back(pivot_of(row));
}

Vec Subspace::reduce(const FqField& F, std::span<const Fq> v) const {
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Fq c = r[pivots_[i]];
    if (c.v != 0) vec_axpy(F, F.neg(c), basis_[i], r);
  }
  return r;
}

bool Subspace::contains(const FqField& F, std::span<const Fq> v) const { return vec_is_zero(reduce(F, v)); }

}  // namespace wittpolar
