#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadrics/gf.hpp"
#include "quadrics/proj_space.hpp"
#include "quadrics/quadric.hpp"

namespace quadrics {

/// A homogeneous form of any degree d >= 1: dense coefficients over the
/// degree-d monomials in n+1 variables, listed as non-decreasing index
/// tuples in lexicographic order.
class Form {
public:
  Form(const Field& f, int n, int degree);

  const Field& field() const { return *field_; }
  int n() const { return n_; }
  int degree() const { return degree_; }

  /// Monomials as index tuples of length degree (i1 <= i2 <= ...).
  const std::vector<std::vector<std::uint8_t>>& monomials() const { return monos_; }
  std::span<const Fel> coeffs() const { return c_; }

  Fel coeff(std::size_t mono) const { return c_[mono]; }
  void set_coeff(std::size_t mono, Fel v) { c_[mono] = v; }
  /// Coefficient of the monomial with the given sorted index tuple.
  void set_coeff(const std::vector<std::uint8_t>& mono, Fel v);

  bool is_zero() const;

  /// Value at an affine coordinate vector over the base field.
  Fel evaluate_vector(std::span<const Fel> v) const;

  /// Value at a vector over F_{q^k}, coefficients embedded through ext.
  Fel evaluate_ext(const FieldExtension& ext, std::span<const Fel> v) const;

  static Form from_quadratic(const QuadraticForm& f);
  /// Throws unless the form has degree 2.
  QuadraticForm to_quadratic() const;

private:
  const Field* field_;
  int n_;
  int degree_;
  std::vector<std::vector<std::uint8_t>> monos_;
  std::vector<Fel> c_;
};

/// Zero set of a nonempty list of forms over a common ambient space.
struct AlgebraicSet {
  std::vector<Form> forms;
  std::optional<long long> declared_deg;
  std::optional<int> declared_dim;
};

/// Exact |X(F_{q^k})| by enumeration of P^n(F_{q^k}).
/// Throws when the enumeration exceeds point_cap points or the extension
/// exceeds the field cap.
long long count_points(const AlgebraicSet& x, int k, long long point_cap = PointTable::kDefaultPointCap,
                       int field_cap = Field::kHardCap);

struct DimDegreeEstimate {
  std::optional<int> s_est;
  std::optional<long long> d_est;
  std::vector<long long> counts;     // |X(F_{q^k})| for k = 1..k_max
  std::vector<double> growth_exps;   // log_q of consecutive count ratios
};

/// Heuristic (d, s) from the growth |X(F_{q^k})| ~ d q^{ks}; estimates are
/// absent when the counts vanish. The raw sequence is always included.
DimDegreeEstimate estimate_dim_degree(const AlgebraicSet& x, int k_max,
                                      long long point_cap = PointTable::kDefaultPointCap,
                                      int field_cap = Field::kHardCap);

struct SetBoundCheck {
  std::string name;
  long long value = 0;
  bool satisfied = false;
  long long slack = 0;
};

struct SetBoundReport {
  long long count = 0;
  long long d = 0;
  int s = 0;
  std::vector<SetBoundCheck> checks;  // tss, lachaud, lachaud_conj
  bool counterexample = false;        // count exceeds the conjectured tss value
  std::string note;
};

/// Compares |X(F_q)| with the set bounds at caller-declared (d, s). Never
/// asserts: a would-be counterexample is flagged in the report.
SetBoundReport check_set_bound(const AlgebraicSet& x, long long d, int s);

nlohmann::ordered_json set_bound_report_json(const SetBoundReport& r);
nlohmann::ordered_json estimate_json(const DimDegreeEstimate& e);

}  // namespace quadrics
