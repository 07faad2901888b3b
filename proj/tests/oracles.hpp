#pragma once

// Brute-force oracles for the test suites. Everything here goes through
// direct enumeration and the definitions themselves, independently of the
// linear-algebra paths in the library.

#include <random>
#include <vector>

#include "quadrics/pair.hpp"
#include "quadrics/proj_space.hpp"
#include "quadrics/quadric.hpp"

namespace oracles {

using quadrics::Fel;
using quadrics::Field;
using quadrics::LinearForm;
using quadrics::PointTable;
using quadrics::QuadraticForm;

// All q^len affine coordinate vectors.
template <typename Fn>
void for_each_vector(const Field& f, int len, Fn&& fn) {
  std::vector<Fel> v(len, 0);
  while (true) {
    fn(std::span<const Fel>(v));
    int i = len - 1;
    while (i >= 0 && v[i] == Fel(f.q() - 1)) v[i--] = 0;
    if (i < 0) break;
    v[i] = Fel(v[i] + 1);
  }
}

// The set {w : F(u+w) = F(u) for all u}, straight from the definition.
inline std::vector<std::vector<Fel>> brute_radical_set(const QuadraticForm& f) {
  const Field& k = f.field();
  const int len = f.n() + 1;
  std::vector<std::vector<Fel>> out;
  std::vector<Fel> sum(len);
  for_each_vector(k, len, [&](std::span<const Fel> w) {
    bool invariant = true;
    for_each_vector(k, len, [&](std::span<const Fel> u) {
      if (!invariant) return;
      for (int i = 0; i < len; ++i) sum[i] = k.add(u[i], w[i]);
      if (f.evaluate_vector(sum) != f.evaluate_vector(u)) invariant = false;
    });
    if (invariant) out.emplace_back(w.begin(), w.end());
  });
  return out;
}

// log_q of the size of a subspace given as an element list.
inline int subspace_dim(const Field& f, std::size_t set_size) {
  int d = 0;
  std::size_t s = 1;
  while (s < set_size) {
    s *= f.q();
    ++d;
  }
  if (s != set_size) throw std::logic_error("set size is not a power of q");
  return d;
}

// The set {w : both forms invariant under translation by w}.
inline std::vector<std::vector<Fel>> brute_pair_radical_set(const QuadraticForm& f1,
                                                            const QuadraticForm& f2) {
  const Field& k = f1.field();
  const int len = f1.n() + 1;
  std::vector<std::vector<Fel>> out;
  std::vector<Fel> sum(len);
  for_each_vector(k, len, [&](std::span<const Fel> w) {
    bool invariant = true;
    for_each_vector(k, len, [&](std::span<const Fel> u) {
      if (!invariant) return;
      for (int i = 0; i < len; ++i) sum[i] = k.add(u[i], w[i]);
      if (f1.evaluate_vector(sum) != f1.evaluate_vector(u) ||
          f2.evaluate_vector(sum) != f2.evaluate_vector(u))
        invariant = false;
    });
    if (invariant) out.emplace_back(w.begin(), w.end());
  });
  return out;
}

inline int brute_order(const QuadraticForm& f1, const QuadraticForm& f2) {
  auto set = brute_pair_radical_set(f1, f2);
  return f1.n() + 1 - subspace_dim(f1.field(), set.size());
}

// |Z(f)| by direct evaluation at every point.
inline long long brute_count(const QuadraticForm& f, const PointTable& table) {
  long long c = 0;
  for (const auto& p : table.points())
    if (f.evaluate_point(p) == 0) ++c;
  return c;
}

// All hyperplanes (as canonical linear forms) contained in Z(f).
inline std::vector<LinearForm> hyperplanes_in(const QuadraticForm& f, const PointTable& table) {
  const Field& k = f.field();
  std::vector<LinearForm> out;
  quadrics::for_each_proj_point(k, f.n(), [&](std::span<const Fel> h) {
    LinearForm l{std::vector<Fel>(h.begin(), h.end())};
    bool inside = true;
    for (const auto& p : table.points()) {
      if (l.evaluate(k, p.coords) != 0) continue;
      if (f.evaluate_point(p) != 0) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(std::move(l));
  });
  return out;
}

// Common hyperplane by exhaustive hyperplane enumeration.
inline std::optional<LinearForm> brute_common_hyperplane(const QuadraticForm& f1,
                                                         const QuadraticForm& f2,
                                                         const PointTable& table) {
  const Field& k = f1.field();
  std::optional<LinearForm> found;
  quadrics::for_each_proj_point(k, f1.n(), [&](std::span<const Fel> h) {
    if (found) return;
    LinearForm l{std::vector<Fel>(h.begin(), h.end())};
    for (const auto& p : table.points()) {
      if (l.evaluate(k, p.coords) != 0) continue;
      if (f1.evaluate_point(p) != 0 || f2.evaluate_point(p) != 0) return;
    }
    found = l;
  });
  return found;
}

// Uniformly random nonzero form up to scalar (canonical coefficient vector).
inline QuadraticForm random_form(const Field& f, int n, std::mt19937_64& rng) {
  const int nm = quadrics::mono_count(n);
  const auto total = quadrics::proj_vector_count(nm, f.q());
  QuadraticForm out(f, n);
  out.raw_coeffs() = quadrics::proj_vector_unrank(f, nm, rng() % total);
  return out;
}

}  // namespace oracles
