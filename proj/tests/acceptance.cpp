// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wittpolar/verify.hpp"

using namespace wittpolar;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
  std::optional<double> time_limit;  // seconds
};

struct Line {
  bool ok;
  std::string text;
};

Line run_criterion(const Criterion& c, const VerifyOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> results;
  std::string failure;
  try {
    for (const auto& s : c.suites) {
      auto part = run_suite(s, opts);
      results.insert(results.end(), part.begin(), part.end());
    }
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      ++passed;
    } else if (failure.empty()) {
      failure = "first failing check: " + r.suite + "/" + r.name + (r.detail.empty() ? "" : " (" + r.detail + ")");
    }
  }
  bool ok = failure.empty() && !results.empty();
  if (results.empty() && failure.empty()) failure = "no checks ran";
  if (c.time_limit && secs > *c.time_limit) {
    ok = false;
    failure = "took longer than " + std::to_string(static_cast<int>(*c.time_limit)) + " s";
  }
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << (ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title << ": " << passed << "/" << results.size()
    << " checks, " << secs << " s";
  if (!ok) s << "; " << failure;
  return {ok, s.str()};
}

std::optional<std::string> capture(const std::string& cmd) {
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = ::pclose(pipe);
  if (status == -1) return std::nullopt;
  out += "\nstatus " + std::to_string(status);
  return out;
}

Line determinism(int id) {
  auto start = std::chrono::steady_clock::now();
  const std::string cmd = std::string("\"") + WITTPOLAR_CLI_PATH + "\" verify --json --seed 7 2>&1";
  auto a = capture(cmd), b = capture(cmd);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = a && b && *a == *b && a->find("\"all_passed\"") != std::string::npos;
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << (ok ? "PASS" : "FAIL") << " " << id << " determinism: two `verify --json --seed 7` runs ";
  if (!a || !b)
    s << "could not be started";
  else if (*a != *b)
    s << "differ";
  else if (!ok)
    s << "produced no verify report";
  else
    s << "byte-identical (" << a->size() << " bytes)";
  s << ", " << secs << " s";
  return {ok, s.str()};
}

}  // namespace

int main() {
  VerifyOptions opts;
  const std::vector<Criterion> criteria{
      {1, "universal polynomials", {"universal"}, 60.0},
      {2, "polar-degree certificate", {"polar-degree"}, std::nullopt},
      {3, "Dieudonne relations", {"dieudonne"}, std::nullopt},
      {4, "Teichmuller identity", {"teichmuller"}, std::nullopt},
      {5, "polarization invariance", {"polarization-invariance"}, std::nullopt},
      {6, "Dwork lemma", {"dwork"}, std::nullopt},
      {7, "etale decomposition", {"etale"}, 30.0},
      {8, "idempotent formula", {"idempotent"}, std::nullopt},
      {9, "formal group law certificate", {"formal-groups"}, 60.0},
      {10, "co-Witt stabilization", {"cowitt"}, std::nullopt},
      {11, "star-group tables", {"star-group"}, std::nullopt},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Line l = run_criterion(c, opts);
    failures += l.ok ? 0 : 1;
    std::cout << l.text << std::endl;
  }
  Line d = determinism(12);
  failures += d.ok ? 0 : 1;
  std::cout << d.text << std::endl;
  std::cout << (12 - failures) << "/12 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
