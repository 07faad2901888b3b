#include "quadrics/varieties.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quadrics/bounds.hpp"

namespace quadrics {

namespace {

// All non-decreasing index tuples of the given length over {0..n},
// lexicographically.
std::vector<std::vector<std::uint8_t>> monomials_of_degree(int n, int degree) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> cur(degree, 0);
  while (true) {
    out.push_back(cur);
    int i = degree - 1;
    while (i >= 0 && cur[i] == n) --i;
    if (i < 0) break;
    std::uint8_t v = ++cur[i];
    for (int j = i + 1; j < degree; ++j) cur[j] = v;
  }
  return out;
}

}  // namespace

Form::Form(const Field& f, int n, int degree)
    : field_(&f), n_(n), degree_(degree) {
  if (n < 0) throw std::invalid_argument("ambient dimension must be >= 0");
  if (degree < 1) throw std::invalid_argument("form degree must be >= 1");
  if (n > 255) throw std::invalid_argument("ambient dimension too large");
  monos_ = monomials_of_degree(n, degree);
  c_.assign(monos_.size(), 0);
}

void Form::set_coeff(const std::vector<std::uint8_t>& mono, Fel v) {
  auto it = std::lower_bound(monos_.begin(), monos_.end(), mono);
  if (it == monos_.end() || *it != mono)
    throw std::invalid_argument("monomial does not match the form's degree/ambient");
  c_[std::size_t(it - monos_.begin())] = v;
}

bool Form::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Fel v) { return v == 0; });
}

Fel Form::evaluate_vector(std::span<const Fel> v) const {
  if (int(v.size()) != n_ + 1) throw std::invalid_argument("coordinate length mismatch");
  const Field& f = *field_;
  Fel acc = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Fel term = c_[k];
    for (std::uint8_t i : monos_[k]) term = f.mul(term, v[i]);
    acc = f.add(acc, term);
  }
  return acc;
}

Fel Form::evaluate_ext(const FieldExtension& ext, std::span<const Fel> v) const {
  if (int(v.size()) != n_ + 1) throw std::invalid_argument("coordinate length mismatch");
  const Field& f = ext.field;
  Fel acc = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Fel term = ext.embed[c_[k]];
    for (std::uint8_t i : monos_[k]) term = f.mul(term, v[i]);
    acc = f.add(acc, term);
  }
  return acc;
}

Form Form::from_quadratic(const QuadraticForm& q) {
  Form out(q.field(), q.n(), 2);
  std::size_t k = 0;
  for (int i = 0; i <= q.n(); ++i)
    for (int j = i; j <= q.n(); ++j, ++k) out.c_[k] = q.coeff(i, j);
  return out;
}

QuadraticForm Form::to_quadratic() const {
  if (degree_ != 2) throw std::invalid_argument("form does not have degree 2");
  QuadraticForm out(*field_, n_);
  std::size_t k = 0;
  for (int i = 0; i <= n_; ++i)
    for (int j = i; j <= n_; ++j, ++k) out.set_coeff(i, j, c_[k]);
  return out;
}

namespace {

void require_consistent(const AlgebraicSet& x) {
  if (x.forms.empty()) throw std::invalid_argument("algebraic set needs at least one form");
  for (const auto& f : x.forms) {
    if (f.n() != x.forms[0].n() || f.field() != x.forms[0].field())
      throw std::invalid_argument("forms of an algebraic set must share field and ambient");
    if (f.is_zero()) throw std::invalid_argument("zero form in algebraic set");
  }
}

}  // namespace

long long count_points(const AlgebraicSet& x, int k, long long point_cap, int field_cap) {
  require_consistent(x);
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  const Field& base = x.forms[0].field();
  const int n = x.forms[0].n();
  FieldExtension ext = extend_field(base, k, field_cap);
  if (pi(n, ext.field.q()) > point_cap)
    throw std::invalid_argument("extension enumeration exceeds the point cap");
  long long count = 0;
  for_each_proj_point(ext.field, n, [&](std::span<const Fel> v) {
    for (const auto& f : x.forms)
      if (f.evaluate_ext(ext, v) != 0) return;
    ++count;
  });
  return count;
}

DimDegreeEstimate estimate_dim_degree(const AlgebraicSet& x, int k_max, long long point_cap,
                                      int field_cap) {
  require_consistent(x);
  if (k_max < 2) throw std::invalid_argument("estimation needs k_max >= 2");
  DimDegreeEstimate e;
  const double q = double(x.forms[0].field().q());
  for (int k = 1; k <= k_max; ++k) e.counts.push_back(count_points(x, k, point_cap, field_cap));
  for (int k = 0; k + 1 < k_max; ++k) {
    if (e.counts[k] <= 0 || e.counts[k + 1] <= 0) continue;
    e.growth_exps.push_back(std::log(double(e.counts[k + 1]) / double(e.counts[k])) /
                            std::log(q));
  }
  if (!e.growth_exps.empty() && e.counts.back() > 0) {
    e.s_est = int(std::lround(e.growth_exps.back()));
    double scale = std::pow(q, double(k_max) * double(*e.s_est));
    e.d_est = std::llround(double(e.counts.back()) / scale);
  }
  return e;
}

SetBoundReport check_set_bound(const AlgebraicSet& x, long long d, int s) {
  require_consistent(x);
  if (d < 1) throw std::invalid_argument("declared degree must be >= 1");
  const int n = x.forms[0].n();
  if (s < 0 || s > n) throw std::invalid_argument("declared dimension out of range");
  const bounds::Int q = x.forms[0].field().q();

  SetBoundReport r;
  r.count = count_points(x, 1);
  r.d = d;
  r.s = s;
  auto push = [&](const std::string& name, bounds::Int v) {
    SetBoundCheck c;
    c.name = name;
    c.value = (long long)v;
    c.satisfied = r.count <= c.value;
    c.slack = c.value - r.count;
    r.checks.push_back(c);
  };
  push("tss", bounds::tss_bound(d, s, q));
  push("lachaud", bounds::lachaud_bound(d, s, q));
  push("lachaud_conj", bounds::lachaud_conj_bound(d, s, n, q));
  r.counterexample = !r.checks[0].satisfied;
  r.note = "(d, s) as declared by the caller; for reducible or mixed-dimension sets their "
           "meaning is the caller's responsibility";
  return r;
}

nlohmann::ordered_json set_bound_report_json(const SetBoundReport& r) {
  nlohmann::ordered_json j;
  j["count"] = r.count;
  j["d"] = r.d;
  j["s"] = r.s;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["value"] = c.value;
    e["satisfied"] = c.satisfied;
    e["slack"] = c.slack;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["counterexample"] = r.counterexample;
  j["note"] = r.note;
  return j;
}

nlohmann::ordered_json estimate_json(const DimDegreeEstimate& e) {
  nlohmann::ordered_json j;
  if (e.s_est)
    j["s_est"] = *e.s_est;
  else
    j["s_est"] = nullptr;
  if (e.d_est)
    j["d_est"] = *e.d_est;
  else
    j["d_est"] = nullptr;
  j["counts"] = e.counts;
  auto arr = nlohmann::ordered_json::array();
  for (double g : e.growth_exps) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", g);
    arr.push_back(std::string(buf));
  }
  j["growth_exponents"] = std::move(arr);
  return j;
}

}  // namespace quadrics
