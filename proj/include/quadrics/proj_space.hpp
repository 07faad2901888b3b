#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quadrics/gf.hpp"

namespace quadrics {

/// pi(n, q) = |P^n(F_q)| = q^n + ... + 1, with pi(n) = 0 for all n < 0.
/// Throws std::overflow_error if the value does not fit in 64 bits and
/// std::invalid_argument for q < 2.
long long pi(int n, long long q);

/// Number of degree-2 monomials x_i x_j (i <= j) in n+1 variables.
inline int mono_count(int n) { return (n + 1) * (n + 2) / 2; }

/// Index of x_i x_j (i <= j) in the row-by-row monomial order
/// (x0x0, x0x1, ..., x0xn, x1x1, ..., xnxn).
inline int mono_index(int n, int i, int j) {
  return i * (n + 1) - i * (i - 1) / 2 + (j - i);
}

/// A point of P^n in canonical coordinates: not all zero, first nonzero
/// coordinate equal to 1.
struct ProjPoint {
  std::vector<Fel> coords;

  /// "(a0:a1:...:an)", extension coordinates as bracketed vectors.
  std::string str(const Field& f) const;

  bool operator==(const ProjPoint&) const = default;
};

/// Scales v by the inverse of its first nonzero coordinate.
/// Throws std::invalid_argument on the zero vector.
void canonicalize_in_place(const Field& f, std::span<Fel> v);
ProjPoint canonicalize(const Field& f, std::span<const Fel> v);

/// Number of canonical projective vectors of the given length: (q^len-1)/(q-1).
unsigned long long proj_vector_count(int len, long long q);

/// The r-th canonical vector of the given length in ascending lexicographic
/// order on coordinate tuples (0 < 1 < ... < q-1 per coordinate).
std::vector<Fel> proj_vector_unrank(const Field& f, int len, unsigned long long r);

/// Advances v to the next canonical vector in the same order; returns false
/// (leaving v at the last vector) when exhausted.
bool proj_vector_advance(const Field& f, std::span<Fel> v);

/// Calls fn(std::span<const Fel>) for every point of P^n(F_q) in ascending
/// lexicographic order on canonical coordinates.
template <typename Fn>
void for_each_proj_point(const Field& f, int n, Fn&& fn) {
  std::vector<Fel> v(n + 1, 0);
  v[n] = 1;
  do {
    fn(std::span<const Fel>(v));
  } while (proj_vector_advance(f, v));
}

/// All points of P^n(F_q) in a fixed deterministic order, with the values of
/// every degree-2 monomial precomputed per point. Owns a copy of the field,
/// so it stays valid on its own. Immutable once built; the census shares one
/// instance across workers.
class PointTable {
public:
  static constexpr long long kDefaultPointCap = 2'000'000;

  /// Throws std::invalid_argument when pi(n, q) exceeds point_cap.
  PointTable(const Field& f, int n, long long point_cap = kDefaultPointCap);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int mono_count() const { return nmono_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ProjPoint>& points() const { return points_; }

  /// Values of x_i x_j (monomial order) at the point with the given index.
  std::span<const Fel> mono_row(std::size_t point_index) const {
    return {mono_.data() + point_index * nmono_, std::size_t(nmono_)};
  }

private:
  Field field_;
  int n_;
  int nmono_;
  std::vector<ProjPoint> points_;
  std::vector<Fel> mono_;
};

}  // namespace quadrics
