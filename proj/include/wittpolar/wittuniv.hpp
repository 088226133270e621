#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wittpolar/exact.hpp"

namespace wittpolar {

enum class WittKind { sum, neg, prod, frob, scalar };

std::string_view kind_name(WittKind kind);
std::optional<WittKind> parse_kind(std::string_view name);

/// Ghost components w_0..w_{n-1} in the variables a_0..a_{n-1}.
struct GhostSequence {
  unsigned p = 0;
  std::vector<MultiPoly> entries;
};

GhostSequence ghost_polys(unsigned p, std::size_t n);

// Ghost map applied to arbitrary components: w_m = sum_i p^i c_i^{p^{m-i}}.
std::vector<MultiPoly> ghost_of(unsigned p, std::span<const MultiPoly> components);

// The Frobenius lift v -> v^p on every variable.
MultiPoly frobenius_lift(const MultiPoly& f, unsigned p);

// Components c with w(c) = target, by p^m c_m = t_m - sum_{i<m} p^i c_i^{p^{m-i}}.
// Throws DworkCongruenceFailed(m) if t_m - phi(t_{m-1}) is not divisible by p^m.
std::vector<MultiPoly> dwork_lift(unsigned p, std::span<const MultiPoly> target);

/// All components of one universal operation. Variable layout:
///   sum, neg: x_0..x_{n-1} then y_0..y_{n-1} (neg uses only x)
///   prod:     p blocks of n variables, block j at offset j*n
///   frob:     x_0..x_n, producing n components
///   scalar:   x_0..x_{n-1} then a_0..a_{n-1}
/// polar_mask flags the variables whose degree must be 1 mod (p-1).
struct UniversalFamily {
  WittKind kind{};
  unsigned p = 0;
  std::size_t n = 0;
  std::vector<std::string> names;
  std::vector<bool> polar_mask;
  std::vector<MultiPoly> components;

  std::size_t nvars() const noexcept { return names.size(); }
};

/// One level of a family, as a standalone value.
struct UnivWittPoly {
  WittKind kind{};
  unsigned p = 0;
  std::size_t level = 0;
  MultiPoly poly;
  std::vector<bool> polar_mask;
};

UnivWittPoly level_of(const UniversalFamily& family, std::size_t level);

// Variable names and polar mask for a family, without computing it.
UniversalFamily family_layout(unsigned p, std::size_t n, WittKind kind);

// Derives the family from scratch (no caching).
UniversalFamily derive_universal(unsigned p, std::size_t n, WittKind kind);

// Memoized in memory; also read from and written to the disk cache when
// cache_directory() is set. Emits a cost warning on stderr outside the
// desk-scale envelope.
std::shared_ptr<const UniversalFamily> universal_polys(unsigned p, std::size_t n, WittKind kind);

bool within_envelope(unsigned p, std::size_t n);

// Directory holding wittpolys/, from $WITTPOLAR_CACHE unless overridden.
std::optional<std::filesystem::path> cache_directory();
void set_cache_directory(std::optional<std::filesystem::path> dir);

bool polar_degree_check(const MultiPoly& poly, const std::vector<bool>& polar_mask, unsigned p);
bool polar_degree_check(const UnivWittPoly& poly);

/// Polynomial over F_p: exponent vector -> nonzero residue.
struct ModPPoly {
  unsigned p = 0;
  std::size_t nvars = 0;
  std::map<Exponents, std::uint32_t> terms;
};

ModPPoly reduce_mod_p(const MultiPoly& poly, unsigned p);
std::vector<ModPPoly> reduce_mod_p(const UniversalFamily& family);
std::shared_ptr<const std::vector<ModPPoly>> reduced_universal_polys(unsigned p, std::size_t n, WittKind kind);

// S_m in x_0..x_m, y_0..y_m, modulo the monomials whose total degree in the
// variables flagged by deep_mask is at least K.
MultiPoly truncated_sum_poly(unsigned p, std::size_t m, const std::vector<bool>& deep_mask, unsigned K);

}  // namespace wittpolar
