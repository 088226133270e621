#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "wittpolar/error.hpp"

namespace wittpolar {

/// Element of a finite field F_{p^m}, stored as the integer sum c_i p^i of
/// its power-basis coordinates. Only meaningful together with its field.
struct Fq {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

using Vec = std::vector<Fq>;

class FqField;
using FieldPtr = std::shared_ptr<const FqField>;

/// F_{p^m} = F_p[t]/(modulus). The modulus is the least monic irreducible
/// polynomial of degree m, comparing coefficient vectors from the top degree
/// down. For m = 1 the modulus is t, so the generator is 0.
class FqField {
 public:
  static FieldPtr build(std::uint32_t p, std::uint32_t m);
  static FieldPtr with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint64_t size() const noexcept { return q_; }
  // Little-endian coefficients, monic, length m + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Fq zero() const noexcept { return Fq{0}; }
  Fq one() const noexcept { return Fq{1}; }
  Fq generator() const;
  Fq from_int(std::int64_t c) const;
  Fq from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(Fq a) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t e) const;
  // a^{p^k}; negative k applies the inverse automorphism.
  Fq frobenius(Fq a, std::int64_t k) const;
  bool in_prime_field(Fq a) const noexcept { return a.v < p_; }

  friend bool operator==(const FqField& a, const FqField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  FqField(std::uint32_t p, std::vector<std::uint32_t> modulus);
  Fq mul_slow(Fq a, Fq b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> mul_table_;  // populated for small fields only
};

bool is_prime(std::uint64_t n);

// Ben-Or style irreducibility test for a monic polynomial over F_p.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

/// Field embedding F_{p^m} -> F_{p^M}, m | M, sending the small generator to
/// the least root of its modulus in the big field.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr small, FieldPtr big);
  static FieldEmbedding identity(FieldPtr field);

  const FieldPtr& source() const noexcept { return small_; }
  const FieldPtr& target() const noexcept { return big_; }
  Fq operator()(Fq a) const;
  Vec operator()(std::span<const Fq> v) const;
  FieldEmbedding then(const FieldEmbedding& next) const;

 private:
  FieldEmbedding(FieldPtr small, FieldPtr big, Fq image);
  FieldPtr small_;
  FieldPtr big_;
  Fq image_;  // image of the small generator
};

// Vector helpers over a field.
Vec vec_zero(std::size_t n);
Vec vec_add(const FqField& F, std::span<const Fq> a, std::span<const Fq> b);
Vec vec_sub(const FqField& F, std::span<const Fq> a, std::span<const Fq> b);
Vec vec_scale(const FqField& F, Fq c, std::span<const Fq> a);
void vec_axpy(const FqField& F, Fq c, std::span<const Fq> x, std::span<Fq> y);  // y += c x
Vec vec_frobenius(const FqField& F, std::span<const Fq> a, std::int64_t k);
bool vec_is_zero(std::span<const Fq> a);
Vec unit_vector(std::size_t n, std::size_t i);

/// Dense rectangular matrix over a field (row-major). The field is passed to
/// each operation rather than stored.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static FqMatrix identity(std::size_t n);
  static FqMatrix from_rows(std::span<const Vec> rows, std::size_t cols);
  static FqMatrix from_columns(std::span<const Vec> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Fq& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  Fq at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;

  Vec apply(const FqField& F, std::span<const Fq> v) const;
  FqMatrix mul(const FqField& F, const FqMatrix& other) const;
  FqMatrix frobenius(const FqField& F, std::int64_t k) const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fq> data_;
};

// Reduced row echelon form of the given rows; zero rows are dropped.
std::vector<Vec> row_echelon(const FqField& F, std::vector<Vec> rows);
std::size_t rank(const FqField& F, const FqMatrix& M);
// Basis of {v : M v = 0}, one vector per free column in increasing order,
// with a 1 in that column.
std::vector<Vec> linear_kernel(const FqField& F, const FqMatrix& M);
// Coefficients c with sum c_i basis_i = v, if v lies in the span.
std::optional<Vec> solve_in_span(const FqField& F, std::span<const Vec> basis, std::span<const Fq> v);

struct SemilinearTerm {
  std::int64_t twist;
  FqMatrix matrix;
};

// F_p-basis of the kernel of v -> sum_k M_k * frob^{twist_k}(v), computed by
// flattening F_q^n to F_p^{mn}.
std::vector<Vec> additive_map_kernel(const FqField& F, std::span<const SemilinearTerm> terms,
                                     std::size_t n);
// Kernel of the single twisted map v -> M * v^{(p^twist)}.
std::vector<Vec> semilinear_kernel(const FqField& F, const FqMatrix& M, std::int64_t twist);

/// A subspace kept as reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const FqField& F, std::size_t ambient, std::vector<Vec> generators);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  bool contains(const FqField& F, std::span<const Fq> v) const;
  Vec reduce(const FqField& F, std::span<const Fq> v) const;  // remainder modulo the subspace
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wittpolar
