#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadrics/gf.hpp"
#include "quadrics/linalg.hpp"
#include "quadrics/proj_space.hpp"

namespace quadrics {

/// A nonzero homogeneous linear form, stored as its coefficient vector.
struct LinearForm {
  std::vector<Fel> c;

  Fel evaluate(const Field& f, std::span<const Fel> v) const;
  /// Scaled so the first nonzero coefficient is 1.
  LinearForm normalized(const Field& f) const;
  std::string str(const Field& f) const;

  bool operator==(const LinearForm&) const = default;
};

/// A degree-2 form in n+1 variables over F_q. Coefficients are stored once
/// per monomial x_i x_j with i <= j, in the mono_index order. The owning
/// Field must outlive the form. Immutable use is thread-safe.
class QuadraticForm {
public:
  QuadraticForm(const Field& f, int n);

  const Field& field() const { return *field_; }
  int n() const { return n_; }

  Fel coeff(int i, int j) const { return c_[mono_index(n_, i, j)]; }
  void set_coeff(int i, int j, Fel v) { c_[mono_index(n_, i, j)] = v; }

  std::span<const Fel> coeffs() const { return c_; }
  std::vector<Fel>& raw_coeffs() { return c_; }

  bool is_zero() const;

  /// Value at an affine coordinate vector of length n+1.
  Fel evaluate_vector(std::span<const Fel> v) const;

  /// Value at a projective point; checks dimension and field.
  Fel evaluate_point(const ProjPoint& p) const;

  /// Dot product against a precomputed monomial row (hot path, unchecked).
  Fel evaluate_row(std::span<const Fel> mono_row) const {
    const Fel* add = field_->add_table();
    const Fel* mul = field_->mul_table();
    const int q = field_->q();
    Fel acc = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      Fel c = c_[k];
      if (c == 0) continue;
      acc = add[std::size_t(acc) * q + mul[std::size_t(c) * q + mono_row[k]]];
    }
    return acc;
  }

  bool operator==(const QuadraticForm& o) const {
    return n_ == o.n_ && *field_ == *o.field_ && c_ == o.c_;
  }

private:
  const Field* field_;
  int n_;
  std::vector<Fel> c_;
};

enum class QuadricType { Hyperbolic, Elliptic, Parabolic };

const char* type_name(QuadricType t);
std::optional<QuadricType> type_from_name(std::string_view s);

struct QuadricProfile {
  int rank = 0;              // r in [1, n+1]
  int vertex_dim = 0;        // n - r, projective dimension of the vertex
  QuadricType type = QuadricType::Parabolic;
  long long point_count = 0;  // |Q| in P^n(F_q)
  long long base_count = 0;   // points of the associated non-degenerate quadric
  std::vector<std::vector<Fel>> vertex_basis;  // basis of the vanishing radical
};

/// Basis of the vanishing radical V(f) = {w : F(u+w) = F(u) for all u}.
/// Kernel of the polar form; in characteristic 2 refined by the kernel of
/// the Frobenius-semilinear map w -> F(w) on that kernel.
/// Throws std::invalid_argument on the zero form.
std::vector<std::vector<Fel>> vanishing_radical(const QuadraticForm& f);

/// n + 1 - dim V(f).
int rank(const QuadraticForm& f);

/// Point count of the non-degenerate rank-r quadric of the given type in
/// P^{r-1}(F_q): hyperbolic/elliptic for even r, parabolic for odd r.
long long nondegenerate_count(int r, QuadricType t, long long q);

/// Full classification: rank, vertex, type (by comparing the enumerated
/// count of the associated non-degenerate base quadric with the three
/// standard counts), and the exact point count via the cone identity
/// base_count * q^{n-r+1} + pi(n-r).
QuadricProfile classify(const QuadraticForm& f);

/// Canonical representative of the (rank, type) class in P^n:
/// hyperbolic 2m: x0x1 + ... + x_{2m-2}x_{2m-1};
/// elliptic 2m: pairs with the last replaced by the deterministic
/// irreducible binary quadratic; parabolic 2m+1: x0^2 + x1x2 + ...
/// Throws std::invalid_argument for incompatible rank/type or rank > n+1.
QuadraticForm canonical_form(int rank, QuadricType type, int n, const Field& f);

/// The deterministic irreducible binary quadratic a x^2 + b xy + c y^2 over
/// F_q (smallest (a, b, c) lexicographically).
std::array<Fel, 3> irreducible_binary_quadratic(const Field& f);

/// Linear factors (L1, L2) with f = L1 * L2 exactly, present iff f has rank
/// <= 2 and splits (rank 1 gives two proportional factors). Absent for
/// irreducible rank-2 (elliptic) and all rank >= 3 forms.
std::optional<std::pair<LinearForm, LinearForm>> split_linear_factors(const QuadraticForm& f);

/// Product of two linear forms as a quadratic form.
QuadraticForm product(const Field& f, int n, const LinearForm& a, const LinearForm& b);

/// f(M x): the form after the linear substitution x -> M x.
QuadraticForm substitute(const QuadraticForm& f, const linalg::Mat& m);

/// Same coefficients reinterpreted in P^n (t = f.n() < n).
QuadraticForm embed(const QuadraticForm& f, int n);

}  // namespace quadrics
