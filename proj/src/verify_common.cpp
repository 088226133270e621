#include <algorithm>
#include <iomanip>
#include <map>

#include "verify_internal.hpp"

namespace wittpolar::detail {

Rng suite_rng(std::uint64_t seed, std::string_view suite) {
  // FNV-1a of the suite name, so suites draw independent streams.
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : suite) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return Rng(seed ^ h);
}

std::size_t random_index(std::size_t n, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Fq random_fq(const FqField& F, Rng& rng) {
  return Fq{static_cast<std::uint32_t>(random_index(F.size(), rng))};
}

Fq random_nonzero_fq(const FqField& F, Rng& rng) {
  return Fq{static_cast<std::uint32_t>(1 + random_index(F.size() - 1, rng))};
}

Vec random_vec(const FqField& F, std::size_t d, Rng& rng) {
  Vec v(d);
  for (auto& c : v) c = random_fq(F, rng);
  return v;
}

FqMatrix random_invertible(const FqField& F, std::size_t d, Rng& rng) {
  for (;;) {
    FqMatrix M(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) M.at(i, j) = random_fq(F, rng);
    if (rank(F, M) == d) return M;
  }
}

namespace {

CommutativeAlgebra random_block(const FieldPtr& F, std::size_t max_dim, Rng& rng) {
  switch (random_index(3, rng)) {
    case 0: {
      const std::size_t d = 1 + random_index(max_dim, rng);
      Vec f = random_vec(*F, d + 1, rng);
      f[d] = F->one();
      return algebras::quotient_ring(F, f);
    }
    case 1:
      return algebras::augmentation_ideal(F, 2 + random_index(max_dim, rng));
    default:
      return algebras::split(F, 1 + random_index(max_dim, rng));
  }
}

}  // namespace

CommutativeAlgebra random_commutative(const FieldPtr& F, std::size_t max_dim, Rng& rng) {
  CommutativeAlgebra R = random_block(F, max_dim, rng);
  if (R.dim < max_dim && random_index(2, rng) == 1)
    R = algebras::product(R, random_block(F, max_dim - R.dim, rng));
  return algebras::change_basis(R, random_invertible(*F, R.dim, rng));
}

CommutativeAlgebra random_reduced(const FieldPtr& F, std::size_t max_dim, Rng& rng) {
  const std::size_t cap = F->degree() == 1 ? max_dim : std::min<std::size_t>(max_dim, 3);
  CommutativeAlgebra R = algebras::field_extension(F, 1 + random_index(cap, rng));
  while (R.dim < max_dim && random_index(3, rng) != 0) {
    const std::size_t room = std::min(cap, max_dim - R.dim);
    R = algebras::product(R, algebras::field_extension(F, 1 + random_index(room, rng)));
  }
  return algebras::change_basis(R, random_invertible(*F, R.dim, rng));
}

WittVector random_witt(const AlgebraPtr& A, std::size_t n, Rng& rng) {
  std::vector<Vec> coords;
  for (std::size_t i = 0; i < n; ++i) coords.push_back(random_vec(*A->field(), A->dim(), rng));
  return WittVector(A, std::move(coords));
}

std::vector<unsigned> primes_for(const VerifyOptions& opts, std::initializer_list<unsigned> defaults) {
  if (opts.p) return {*opts.p};
  return std::vector<unsigned>(defaults);
}

void Recorder::check(std::string name, bool ok, std::string detail) {
  out_.push_back(CheckResult{suite_, std::move(name), ok, std::move(detail)});
}

void Recorder::guarded(const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    check(name, false, std::string("exception: ") + e.what());
  }
}

std::string field_label(const FqField& F) { return "F" + std::to_string(F.size()); }

}  // namespace wittpolar::detail

namespace wittpolar {

namespace {

using SuiteFn = std::vector<CheckResult> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"universal", detail::suite_universal},
      {"polar-degree", detail::suite_polar_degree},
      {"dieudonne", detail::suite_dieudonne},
      {"teichmuller", detail::suite_teichmuller},
      {"polarization-invariance", detail::suite_invariance},
      {"dwork", detail::suite_dwork},
      {"etale", detail::suite_etale},
      {"idempotent", detail::suite_idempotent},
      {"formal-groups", detail::suite_formal_groups},
      {"cowitt", detail::suite_cowitt},
      {"star-group", detail::suite_star_group},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(opts);
  throw InvalidInput("unknown suite '" + name + "'");
}

std::vector<CheckResult> run_all(const VerifyOptions& opts) {
  std::vector<CheckResult> all;
  for (const auto& [name, fn] : registry()) {
    auto part = fn(opts);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

Json results_to_json(const std::vector<CheckResult>& results, const VerifyOptions& opts) {
  Json checks = Json::array();
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;
  for (const auto& r : results) {
    checks.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    auto& [pass, total] = per_suite[r.suite];
    ++total;
    if (r.passed) ++pass;
  }
  Json summary = Json::object();
  for (const auto& [suite, counts] : per_suite)
    summary[suite] = {{"passed", counts.first}, {"total", counts.second}};
  Json j = {{"seed", opts.seed}, {"all_passed", all_passed(results)}, {"summary", summary}, {"checks", checks}};
  if (opts.p) j["p"] = *opts.p;
  return with_format(j);
}

std::string results_to_table(const std::vector<CheckResult>& results) {
  std::size_t w_suite = 5, w_name = 5;
  for (const auto& r : results) {
    w_suite = std::max(w_suite, r.suite.size());
    w_name = std::max(w_name, r.name.size());
  }
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "ok   " : "FAIL ") << std::left << std::setw(static_cast<int>(w_suite)) << r.suite << "  "
       << std::setw(static_cast<int>(w_name)) << r.name;
    if (!r.detail.empty()) os << "  " << r.detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace wittpolar
