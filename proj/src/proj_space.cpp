#include "quadrics/proj_space.hpp"

#include <limits>
#include <stdexcept>

namespace quadrics {

long long pi(int n, long long q) {
  if (q < 2) throw std::invalid_argument("pi requires q >= 2");
  if (n < 0) return 0;
  long long sum = 0;
  for (int i = 0; i <= n; ++i) {
    if (sum > (std::numeric_limits<long long>::max() - 1) / q)
      throw std::overflow_error("pi overflows 64 bits");
    sum = sum * q + 1;
  }
  return sum;
}

std::string ProjPoint::str(const Field& f) const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ':';
    s += f.str(coords[i]);
  }
  s += ')';
  return s;
}

void canonicalize_in_place(const Field& f, std::span<Fel> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1) {
      Fel s = f.inv(v[i]);
      for (std::size_t j = i; j < v.size(); ++j) v[j] = f.mul(v[j], s);
    }
    return;
  }
  throw std::invalid_argument("cannot canonicalize the zero vector");
}

ProjPoint canonicalize(const Field& f, std::span<const Fel> v) {
  ProjPoint p;
  p.coords.assign(v.begin(), v.end());
  canonicalize_in_place(f, p.coords);
  return p;
}

unsigned long long proj_vector_count(int len, long long q) {
  unsigned long long total = 0, power = 1;
  for (int i = 0; i < len; ++i) {
    total += power;
    if (power > std::numeric_limits<unsigned long long>::max() / q)
      throw std::overflow_error("projective vector count overflows 64 bits");
    power *= q;
  }
  return total;
}

std::vector<Fel> proj_vector_unrank(const Field& f, int len, unsigned long long r) {
  const long long q = f.q();
  // Blocks by leading-zero count z = len-1 down to 0, of size q^(len-1-z);
  // within a block the free coordinates count up big-endian.
  unsigned long long block = 1;
  for (int z = len - 1; z >= 0; --z) {
    if (r < block) {
      std::vector<Fel> v(len, 0);
      v[z] = 1;
      for (int i = len - 1; i > z; --i) {
        v[i] = Fel(r % q);
        r /= q;
      }
      return v;
    }
    r -= block;
    block *= q;
  }
  throw std::out_of_range("projective vector rank out of range");
}

bool proj_vector_advance(const Field& f, std::span<Fel> v) {
  const int len = int(v.size());
  const Fel top = Fel(f.q() - 1);
  int lead = 0;
  while (lead < len && v[lead] == 0) ++lead;
  // Odometer over the coordinates right of the leading 1.
  for (int i = len - 1; i > lead; --i) {
    if (v[i] != top) {
      v[i] = Fel(v[i] + 1);
      return true;
    }
    v[i] = 0;
  }
  if (lead == 0) return false;
  v[lead] = 0;
  v[lead - 1] = 1;
  return true;
}

PointTable::PointTable(const Field& f, int n, long long point_cap)
    : field_(f), n_(n), nmono_(quadrics::mono_count(n)) {
  if (n < 0) throw std::invalid_argument("ambient dimension must be >= 0");
  long long npts = pi(n, f.q());
  if (npts > point_cap)
    throw std::invalid_argument("point table of size " + std::to_string(npts) +
                                " exceeds the cap " + std::to_string(point_cap));
  points_.reserve(std::size_t(npts));
  mono_.reserve(std::size_t(npts) * nmono_);
  for_each_proj_point(f, n, [&](std::span<const Fel> v) {
    ProjPoint p;
    p.coords.assign(v.begin(), v.end());
    points_.push_back(std::move(p));
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j) mono_.push_back(f.mul(v[i], v[j]));
  });
}

}  // namespace quadrics
