#include "wittpolar/wittuniv.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "wittpolar/serialize.hpp"

namespace wittpolar {

std::string_view kind_name(WittKind kind) {
  switch (kind) {
    case WittKind::sum: return "sum";
    case WittKind::neg: return "neg";
    case WittKind::prod: return "prod";
    case WittKind::frob: return "frob";
    case WittKind::scalar: return "scalar";
  }
  return "?";
}

std::optional<WittKind> parse_kind(std::string_view name) {
  for (auto k : {WittKind::sum, WittKind::neg, WittKind::prod, WittKind::frob, WittKind::scalar}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

void check_prime(unsigned p) {
  if (p < 2 || !is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
}

Integer ipow(unsigned p, std::size_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

std::vector<MultiPoly> ghost_filtered(unsigned p, std::span<const MultiPoly> c, const TermFilter& keep) {
  std::vector<MultiPoly> w;
  if (c.empty()) return w;
  const std::size_t nv = c[0].nvars();
  // pw[i] holds c_i^{p^{m-i}} for the current m.
  std::vector<MultiPoly> pw;
  for (std::size_t m = 0; m < c.size(); ++m) {
    for (auto& f : pw) f = f.pow(p, keep);
    pw.push_back(c[m].filtered(keep));
    MultiPoly acc(nv);
    for (std::size_t i = 0; i <= m; ++i) acc += pw[i].scaled(Rational(ipow(p, i)));
    w.push_back(std::move(acc));
  }
  return w;
}

std::vector<MultiPoly> dwork_filtered(unsigned p, std::span<const MultiPoly> target, const TermFilter& keep) {
  check_prime(p);
  std::vector<MultiPoly> c;
  if (target.empty()) return c;
  const std::size_t nv = target[0].nvars();
  std::vector<MultiPoly> pw;  // c_i^{p^{m-i}}
  for (std::size_t m = 0; m < target.size(); ++m) {
    if (target[m].nvars() != nv) throw InvalidInput("ghost target components live in different universes");
    MultiPoly t = target[m].filtered(keep);
    if (m > 0) {
      MultiPoly diff = t - frobenius_lift(target[m - 1], p).filtered(keep);
      try {
        (void)exact_div_int(diff, ipow(p, m));
      } catch (const IntegralityViolation&) {
        throw DworkCongruenceFailed(static_cast<unsigned>(m));
      }
    }
    for (auto& f : pw) f = f.pow(p, keep);
    MultiPoly D = t;
    for (std::size_t i = 0; i < m; ++i) D -= pw[i].scaled(Rational(ipow(p, i)));
    MultiPoly cm = exact_div_int(D, ipow(p, m));
    pw.push_back(cm);
    c.push_back(std::move(cm));
  }
  return c;
}

std::vector<MultiPoly> block_vars(std::size_t nvars, std::size_t offset, std::size_t len) {
  std::vector<MultiPoly> v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(MultiPoly::variable(nvars, offset + i));
  return v;
}

std::string block_name(std::size_t j) {
  static const char letters[] = {'x', 'y', 'z', 'u', 'v'};
  if (j < 5) return std::string(1, letters[j]);
  return "b" + std::to_string(j) + "_";
}

}  // namespace

GhostSequence ghost_polys(unsigned p, std::size_t n) {
  check_prime(p);
  if (n < 1) throw InvalidInput("length must be at least 1");
  auto vars = block_vars(n, 0, n);
  return GhostSequence{p, ghost_filtered(p, vars, {})};
}

std::vector<MultiPoly> ghost_of(unsigned p, std::span<const MultiPoly> components) {
  check_prime(p);
  return ghost_filtered(p, components, {});
}

MultiPoly frobenius_lift(const MultiPoly& f, unsigned p) {
  MultiPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponents ep(e);
    for (auto& x : ep) x *= p;
    r.add_term(ep, c);
  }
  return r;
}

std::vector<MultiPoly> dwork_lift(unsigned p, std::span<const MultiPoly> target) {
  return dwork_filtered(p, target, {});
}

UnivWittPoly level_of(const UniversalFamily& family, std::size_t level) {
  return UnivWittPoly{family.kind, family.p, level, family.components.at(level), family.polar_mask};
}

UniversalFamily family_layout(unsigned p, std::size_t n, WittKind kind) {
  check_prime(p);
  if (n < 1) throw InvalidInput("length must be at least 1");
  UniversalFamily f;
  f.kind = kind;
  f.p = p;
  f.n = n;
  auto add_block = [&](const std::string& letter, std::size_t len, bool polar) {
    for (std::size_t i = 0; i < len; ++i) {
      f.names.push_back(letter + std::to_string(i));
      f.polar_mask.push_back(polar);
    }
  };
  switch (kind) {
    case WittKind::sum:
    case WittKind::neg:
      add_block("x", n, true);
      add_block("y", n, true);
      break;
    case WittKind::prod:
      for (unsigned j = 0; j < p; ++j) add_block(block_name(j), n, true);
      break;
    case WittKind::frob:
      add_block("x", n + 1, true);
      break;
    case WittKind::scalar:
      add_block("x", n, true);
      add_block("a", n, false);
      break;
  }
  return f;
}

UniversalFamily derive_universal(unsigned p, std::size_t n, WittKind kind) {
  UniversalFamily f = family_layout(p, n, kind);
  const std::size_t nv = f.nvars();
  std::vector<MultiPoly> target;
  switch (kind) {
    case WittKind::sum: {
      auto wx = ghost_of(p, block_vars(nv, 0, n));
      auto wy = ghost_of(p, block_vars(nv, n, n));
      for (std::size_t m = 0; m < n; ++m) target.push_back(wx[m] + wy[m]);
      break;
    }
    case WittKind::neg: {
      auto wx = ghost_of(p, block_vars(nv, 0, n));
      for (std::size_t m = 0; m < n; ++m) target.push_back(-wx[m]);
      break;
    }
    case WittKind::prod: {
      target.assign(n, MultiPoly::constant(nv, Rational(1)));
      for (unsigned j = 0; j < p; ++j) {
        auto w = ghost_of(p, block_vars(nv, j * n, n));
        for (std::size_t m = 0; m < n; ++m) target[m] = target[m] * w[m];
      }
      break;
    }
    case WittKind::frob: {
      auto w = ghost_of(p, block_vars(nv, 0, n + 1));
      target.assign(w.begin() + 1, w.end());
      break;
    }
    case WittKind::scalar: {
      auto wx = ghost_of(p, block_vars(nv, 0, n));
      auto wa = ghost_of(p, block_vars(nv, n, n));
      for (std::size_t m = 0; m < n; ++m) target.push_back(wa[m] * wx[m]);
      break;
    }
  }
  f.components = dwork_lift(p, target);
  for (std::size_t m = 0; m < n; ++m) {
    if (!f.components[m].is_integral()) throw InternalInvariant("universal polynomial is not integral");
    if (!polar_degree_check(f.components[m], f.polar_mask, p)) {
      throw InternalInvariant("universal " + std::string(kind_name(kind)) + " polynomial at level " +
                              std::to_string(m) + " is not polar");
    }
  }
  return f;
}

bool within_envelope(unsigned p, std::size_t n) { return (p <= 5 && n <= 2) || (p <= 3 && n <= 4); }

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

struct CacheDirState {
  bool overridden = false;
  std::optional<std::filesystem::path> dir;
};

CacheDirState& cache_dir_state() {
  static CacheDirState s;
  return s;
}

using FamilyKey = std::tuple<unsigned, std::size_t, WittKind>;

std::map<FamilyKey, std::shared_ptr<const UniversalFamily>>& family_cache() {
  static std::map<FamilyKey, std::shared_ptr<const UniversalFamily>> c;
  return c;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, unsigned p, std::size_t n, WittKind kind) {
  std::ostringstream name;
  name << "p" << p << "_n" << n << "_" << kind_name(kind) << ".json";
  return dir / "wittpolys" / name.str();
}

std::optional<UniversalFamily> read_cached(const std::filesystem::path& file, unsigned p, std::size_t n,
                                           WittKind kind) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    UniversalFamily f = family_from_json(j);
    UniversalFamily layout = family_layout(p, n, kind);
    if (f.kind != kind || f.p != p || f.n != n || f.names != layout.names || f.components.size() != n) {
      return std::nullopt;
    }
    return f;
  } catch (const std::exception&) {
    // A corrupt or foreign cache file is ignored and rewritten.
    return std::nullopt;
  }
}

void write_cached(const std::filesystem::path& file, const UniversalFamily& f) {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) return;
  auto tmp = file;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << family_to_json(f).dump() << '\n';
    if (!out) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

std::optional<std::filesystem::path> cache_directory() {
  std::lock_guard lock(cache_mutex());
  auto& s = cache_dir_state();
  if (s.overridden) return s.dir;
  if (const char* env = std::getenv("WITTPOLAR_CACHE"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

void set_cache_directory(std::optional<std::filesystem::path> dir) {
  std::lock_guard lock(cache_mutex());
  cache_dir_state() = CacheDirState{true, std::move(dir)};
}

std::shared_ptr<const UniversalFamily> universal_polys(unsigned p, std::size_t n, WittKind kind) {
  check_prime(p);
  if (n < 1) throw InvalidInput("length must be at least 1");
  const FamilyKey key{p, n, kind};
  {
    std::lock_guard lock(cache_mutex());
    auto it = family_cache().find(key);
    if (it != family_cache().end()) return it->second;
  }
  if (!within_envelope(p, n)) {
    static std::set<FamilyKey> warned;
    std::lock_guard lock(cache_mutex());
    if (warned.insert(key).second) {
      std::cerr << "warning: universal " << kind_name(kind) << " polynomials for p=" << p << ", n=" << n
                << " are outside the desk-scale envelope and may be slow\n";
    }
  }
  auto dir = cache_directory();
  std::optional<UniversalFamily> fam;
  if (dir) fam = read_cached(cache_file(*dir, p, n, kind), p, n, kind);
  if (!fam) {
    fam = derive_universal(p, n, kind);
    if (dir) write_cached(cache_file(*dir, p, n, kind), *fam);
  }
  auto ptr = std::make_shared<const UniversalFamily>(std::move(*fam));
  std::lock_guard lock(cache_mutex());
  return family_cache().emplace(key, std::move(ptr)).first->second;
}

bool polar_degree_check(const MultiPoly& poly, const std::vector<bool>& polar_mask, unsigned p) {
  if (polar_mask.size() != poly.nvars()) throw InvalidInput("polar mask has wrong length");
  for (const auto& [e, c] : poly.terms()) {
    if ((MultiPoly::block_degree(e, polar_mask) + p - 2) % (p - 1) != 0) return false;
  }
  return true;
}

bool polar_degree_check(const UnivWittPoly& poly) { return polar_degree_check(poly.poly, poly.polar_mask, poly.p); }

ModPPoly reduce_mod_p(const MultiPoly& poly, unsigned p) {
  return ModPPoly{p, poly.nvars(), reduce_coefficients_mod(poly, p)};
}

std::vector<ModPPoly> reduce_mod_p(const UniversalFamily& family) {
  std::vector<ModPPoly> out;
  for (const auto& c : family.components) out.push_back(reduce_mod_p(c, family.p));
  return out;
}

std::shared_ptr<const std::vector<ModPPoly>> reduced_universal_polys(unsigned p, std::size_t n, WittKind kind) {
  static std::map<FamilyKey, std::shared_ptr<const std::vector<ModPPoly>>> cache;
  const FamilyKey key{p, n, kind};
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto fam = universal_polys(p, n, kind);
  auto red = std::make_shared<const std::vector<ModPPoly>>(reduce_mod_p(*fam));
  std::lock_guard lock(cache_mutex());
  return cache.emplace(key, std::move(red)).first->second;
}

MultiPoly truncated_sum_poly(unsigned p, std::size_t m, const std::vector<bool>& deep_mask, unsigned K) {
  const std::size_t n = m + 1;
  if (deep_mask.size() != 2 * n) throw InvalidInput("deep mask has wrong length");
  using Key = std::tuple<unsigned, std::size_t, std::vector<bool>, unsigned>;
  static std::map<Key, MultiPoly> cache;
  Key key{p, m, deep_mask, K};
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TermFilter keep = [&deep_mask, K](const Exponents& e) { return MultiPoly::block_degree(e, deep_mask) < K; };
  const std::size_t nv = 2 * n;
  auto wx = ghost_filtered(p, block_vars(nv, 0, n), keep);
  auto wy = ghost_filtered(p, block_vars(nv, n, n), keep);
  std::vector<MultiPoly> target;
  for (std::size_t i = 0; i < n; ++i) target.push_back(wx[i] + wy[i]);
  MultiPoly result = dwork_filtered(p, target, keep).back();
  std::lock_guard lock(cache_mutex());
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace wittpolar
