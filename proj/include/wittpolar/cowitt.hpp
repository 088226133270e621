#pragma once

#include <map>
#include <optional>
#include <utility>

#include "wittpolar/wittmod.hpp"

namespace wittpolar {

/// Co-Witt vector (a_i)_{i <= 0} whose entries equal tail_value except at
/// finitely many indices. witness = (r, s) certifies that the ideal
/// generated by the tail and the entries at indices <= -r satisfies
/// I^{p^s} = 0.
class CoWittElement {
 public:
  using Exceptions = std::map<long, Vec>;  // keys <= 0

  CoWittElement(AlgebraPtr algebra, Vec tail, Exceptions exceptions, std::pair<unsigned, unsigned> witness);
  static CoWittElement zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Vec& tail() const noexcept { return tail_; }
  const Exceptions& exceptions() const noexcept { return exceptions_; }
  std::pair<unsigned, unsigned> witness() const noexcept { return witness_; }
  void set_witness(std::pair<unsigned, unsigned> w) noexcept { witness_ = w; }

  // Entry at index i <= 0.
  const Vec& at(long i) const;
  // Largest n with an exception at -n, or -1 without exceptions.
  long depth() const noexcept { return exceptions_.empty() ? -1 : -exceptions_.begin()->first; }

  // Same entries; the witness is not compared.
  friend bool operator==(const CoWittElement& a, const CoWittElement& b) {
    return a.tail_ == b.tail_ && a.exceptions_ == b.exceptions_;
  }

 private:
  AlgebraPtr algebra_;
  Vec tail_;
  Exceptions exceptions_;
  std::pair<unsigned, unsigned> witness_;
};

// The ideal generated by the tail and the entries at indices <= -r.
PolarIdeal deep_ideal(const CoWittElement& x, unsigned r);

bool witness_holds(const CoWittElement& x, std::pair<unsigned, unsigned> witness);

struct Validation {
  bool valid = false;
  std::optional<std::pair<unsigned, unsigned>> witness;  // smallest r + s found
};

// Checks the stored witness; if it fails, searches r <= depth + 1 and
// s <= dim + 1.
Validation cw_validate(const CoWittElement& x);

struct CwAddOptions {
  unsigned repeats = 0;  // consecutive equal values; 0 means dim + 2
  unsigned cap = 0;      // largest window length; 0 means max(16, 4 (r + s) dim)
};

CoWittElement cw_add(const CoWittElement& x, const CoWittElement& y, const CwAddOptions& opts = {});
// k-fold sum, k >= 0.
CoWittElement cw_multiple(unsigned k, const CoWittElement& x, const CwAddOptions& opts = {});

// Windowed sum S_m(a_{-n-m}, ..., a_{-n}; b_{-n-m}, ..., b_{-n}) for m = 0..max_m.
std::vector<Vec> cw_sum_sequence(const CoWittElement& x, const CoWittElement& y, long n, unsigned max_m);

// Componentwise p-th power.
CoWittElement cw_F(const CoWittElement& x);
// (..., a_2, a_1): the entry at -k becomes the old entry at -(k+1).
CoWittElement cw_V(const CoWittElement& x);

// CW^u -> CW: finite support, tail 0, last coordinate at index 0.
CoWittElement cw_from_cwu(const CwuClass& c);
// Inverse on elements with zero tail.
CwuClass cwu_from_cw(const CoWittElement& x);

}  // namespace wittpolar
