#pragma once

#include <optional>
#include <string>
#include <vector>

namespace quadrics::bounds {

/// Exact integer type for bound values; wide enough for the verification
/// grid (q up to 13, n up to 20 needs ~2^69).
using Int = __int128;

std::string int_str(Int v);

/// Exact rational with positive denominator, always reduced.
struct Rational {
  Int num = 0;
  Int den = 1;

  static Rational of(Int v) { return {v, 1}; }
  static Rational make(Int num, Int den);

  Rational operator+(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator<(const Rational& o) const;
  bool operator==(const Rational& o) const;

  Int floor() const;
  bool is_integer() const { return den == 1; }
  /// "35" or "71/2".
  std::string str() const;
};

/// pi_n = q^n + ... + 1, zero for n < 0. Throws std::overflow_error when the
/// value exceeds the Int range.
Int pi_big(int n, Int q);

/// 2(4q^{n-2} + 4 pi_{n-3}) + 7/(q-1). Resultant-method bound; no common
/// component.
Rational schmidt_bound(int n, Int q);

/// 2(4q^{n-2} + pi_{n-3}) + 1/(q-1). Sharper historical bound; no common
/// component.
Rational aubry_bound(int n, Int q);

/// Leep-Schueller bound for pairs of full order; n >= 3.
/// 2q^{n-2} + pi_{n-3} + 2q^{(n-1)/2} - q^{(n-3)/2}  (n+1 even)
/// 2q^{n-2} + pi_{n-3} + q^{n/2}                     (n+1 odd)
Int ls_bound(int n, Int q);

/// 4q^{n-2} + pi_{n-3}: the sharp bound for two quadrics with no common
/// hyperplane. n >= 2 (pi_{-1} = 0 at n = 2).
Int two_quadrics_bound(int n, Int q);

/// One branch of the EH bound (one of the two quadrics non-degenerate).
struct EhBranch {
  std::string name;       // "eh_even_a" | "eh_even_b" | "eh_odd"
  std::string condition;  // the branch condition as catalogued
  bool applies;           // condition holds for this n
  Int value;
};

/// All three EH branches at this n (n >= 3). The two conditions on the even
/// branches are catalogued identically; both are reported as they stand.
std::vector<EhBranch> eh_bound(int n, Int q);

/// Largest applicable EH branch value.
Int eh_bound_max(int n, Int q);

/// Conjectured bound for a degenerate rank-r quadric (r >= 4) meeting
/// another quadric: EHmax(r-1, q) q^{n-r+1} + pi_{n-r}.
Int cone_pair_bound(int n, int r, Int q);

/// d q^s + pi_{s-1}: the Tsfasman-Serre-Sorensen form of the point-count
/// bound (proven for hypersurfaces, conjectured in general).
Int tss_bound(Int d, int s, Int q);

/// d pi_s.
Int lachaud_bound(Int d, int s, Int q);

/// d(pi_s - pi_{2s-n}) + pi_{2s-n}, with pi of a negative index zero.
Int lachaud_conj_bound(Int d, int s, int n, Int q);

struct BoundsEntry {
  std::string name;
  Rational value;
  std::string hypothesis;
};

struct BoundsTable {
  int n = 0;
  Int q = 0;
  std::optional<Int> d;
  std::optional<int> s;
  std::optional<int> r;
  std::vector<BoundsEntry> entries;
};

/// Every catalogued bound that is defined for these parameters; the set
/// bounds (tss, lachaud, lachaud_conj) appear when d and s are given, the
/// cone-pair bound when r is given.
BoundsTable make_bounds_table(int n, Int q, std::optional<Int> d = std::nullopt,
                              std::optional<int> s = std::nullopt,
                              std::optional<int> r = std::nullopt);

}  // namespace quadrics::bounds
