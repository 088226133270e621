#pragma once

#include <functional>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wittpolar/ppolar.hpp"
#include "wittpolar/verify.hpp"
#include "wittpolar/wittmod.hpp"

namespace wittpolar::detail {

using Rng = std::mt19937_64;

Rng suite_rng(std::uint64_t seed, std::string_view suite);

Fq random_fq(const FqField& F, Rng& rng);
Fq random_nonzero_fq(const FqField& F, Rng& rng);
Vec random_vec(const FqField& F, std::size_t d, Rng& rng);
FqMatrix random_invertible(const FqField& F, std::size_t d, Rng& rng);
std::size_t random_index(std::size_t n, Rng& rng);  // uniform in [0, n)

// Quotient rings, augmentation ideals, split algebras and products of
// these, of dimension <= max_dim, in a random basis.
CommutativeAlgebra random_commutative(const FieldPtr& F, std::size_t max_dim, Rng& rng);
// Reduced (products of field extensions), dimension <= max_dim, random basis.
CommutativeAlgebra random_reduced(const FieldPtr& F, std::size_t max_dim, Rng& rng);

WittVector random_witt(const AlgebraPtr& A, std::size_t n, Rng& rng);

std::vector<unsigned> primes_for(const VerifyOptions& opts, std::initializer_list<unsigned> defaults);

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}
  void check(std::string name, bool ok, std::string detail = {});
  // Runs body; an exception is recorded as a failure with its message.
  void guarded(const std::string& name, const std::function<void()>& body);
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

std::string field_label(const FqField& F);

std::vector<CheckResult> suite_universal(const VerifyOptions& opts);
std::vector<CheckResult> suite_polar_degree(const VerifyOptions& opts);
std::vector<CheckResult> suite_dieudonne(const VerifyOptions& opts);
std::vector<CheckResult> suite_teichmuller(const VerifyOptions& opts);
std::vector<CheckResult> suite_invariance(const VerifyOptions& opts);
std::vector<CheckResult> suite_dwork(const VerifyOptions& opts);
std::vector<CheckResult> suite_etale(const VerifyOptions& opts);
std::vector<CheckResult> suite_idempotent(const VerifyOptions& opts);
std::vector<CheckResult> suite_formal_groups(const VerifyOptions& opts);
std::vector<CheckResult> suite_cowitt(const VerifyOptions& opts);
std::vector<CheckResult> suite_star_group(const VerifyOptions& opts);

}  // namespace wittpolar::detail
