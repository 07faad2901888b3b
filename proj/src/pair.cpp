#include "quadrics/pair.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadrics {

namespace {

void require_same_ambient(const QuadraticForm& f1, const QuadraticForm& f2) {
  if (f1.n() != f2.n()) throw std::invalid_argument("forms live in different ambient spaces");
  if (f1.field() != f2.field()) throw std::invalid_argument("forms live over different fields");
  if (f1.is_zero() || f2.is_zero()) throw std::invalid_argument("the zero form has no quadric");
}

}  // namespace

int order(const QuadraticForm& f1, const QuadraticForm& f2) {
  require_same_ambient(f1, f2);
  const Field& k = f1.field();
  auto v1 = vanishing_radical(f1);
  auto v2 = vanishing_radical(f2);
  // dim(V1 ∩ V2) = dim V1 + dim V2 - dim(V1 + V2)
  std::vector<std::vector<Fel>> stacked = v1;
  stacked.insert(stacked.end(), v2.begin(), v2.end());
  int sum_dim = linalg::rank_of_rows(k, stacked);
  int inter_dim = int(v1.size()) + int(v2.size()) - sum_dim;
  return f1.n() + 1 - inter_dim;
}

std::optional<LinearForm> common_hyperplane(const QuadraticForm& f1, const QuadraticForm& f2) {
  require_same_ambient(f1, f2);
  const Field& k = f1.field();
  auto s1 = split_linear_factors(f1);
  if (!s1) return std::nullopt;
  auto s2 = split_linear_factors(f2);
  if (!s2) return std::nullopt;
  const LinearForm a[2] = {s1->first.normalized(k), s1->second.normalized(k)};
  const LinearForm b[2] = {s2->first.normalized(k), s2->second.normalized(k)};
  for (const auto& x : a)
    for (const auto& y : b)
      if (x == y) return x;
  return std::nullopt;
}

bool hyperplane_in_quadric(const LinearForm& l, const QuadraticForm& f, const PointTable& table) {
  const Field& k = f.field();
  if (f.n() != table.n() || int(l.c.size()) != f.n() + 1 || k != table.field())
    throw std::invalid_argument("hyperplane/quadric/table mismatch");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& p = table.points()[i];
    if (l.evaluate(k, p.coords) != 0) continue;
    if (f.evaluate_row(table.mono_row(i)) != 0) return false;
  }
  return true;
}

long long intersection_count(const QuadraticForm& f1, const QuadraticForm& f2,
                             const PointTable& table) {
  require_same_ambient(f1, f2);
  if (f1.n() != table.n() || f1.field() != table.field())
    throw std::invalid_argument("point table does not match the forms");
  long long count = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto row = table.mono_row(i);
    if (f1.evaluate_row(row) == 0 && f2.evaluate_row(row) == 0) ++count;
  }
  return count;
}

long long cone_lift_bound(long long m, int l, long long q) {
  if (m < 0 || l < 1) throw std::invalid_argument("cone lift needs m >= 0 and l >= 1");
  long long r = m;
  for (int i = 0; i < l; ++i) r *= q;
  return r + pi(l - 1, q);
}

std::pair<QuadraticForm, QuadraticForm> embed_pair(const QuadraticForm& f1,
                                                   const QuadraticForm& f2, int n) {
  require_same_ambient(f1, f2);
  return {embed(f1, n), embed(f2, n)};
}

PairReport pair_report(const QuadraticForm& f1, const QuadraticForm& f2,
                       const PointTable& table) {
  require_same_ambient(f1, f2);
  const int n = f1.n();
  if (n < 2) throw std::invalid_argument("pair reports require n >= 2");
  const bounds::Int q = f1.field().q();

  PairReport r;
  r.n = n;
  r.order = order(f1, f2);
  r.common_hyperplane = common_hyperplane(f1, f2);
  r.count = intersection_count(f1, f2, table);
  r.bound_theorem = (long long)bounds::two_quadrics_bound(n, q);
  r.slack = r.bound_theorem - r.count;

  const int r1 = rank(f1), r2 = rank(f2);
  const bool full_order = r.order == n + 1;
  const bool one_nondegenerate = r1 == n + 1 || r2 == n + 1;

  // distinct quadrics as varieties
  long long c1 = intersection_count(f1, f1, table);
  bool same_variety = r.count == c1 && intersection_count(f2, f2, table) == c1;
  const bool no_common_component = !r.common_hyperplane && !same_variety;

  r.bounds.push_back({"two_quadrics", bounds::Rational::of(r.bound_theorem),
                      "distinct quadrics, no common hyperplane", no_common_component});
  r.bounds.push_back({"aubry", bounds::aubry_bound(n, q), "no common component",
                      no_common_component});
  r.bounds.push_back({"schmidt", bounds::schmidt_bound(n, q), "no common component",
                      no_common_component});
  if (n >= 3) {
    r.bounds.push_back({"leep_schueller", bounds::Rational::of(bounds::ls_bound(n, q)),
                        "full order", full_order});
    for (const auto& b : bounds::eh_bound(n, q)) {
      if (!b.applies) continue;  // branch parity does not match this n
      r.bounds.push_back({b.name, bounds::Rational::of(b.value),
                          "one quadric non-degenerate; " + b.condition, one_nondegenerate});
    }
    for (int rr : {r1, r2}) {
      if (rr < 4 || rr > n) continue;
      const int other = rr == r1 ? r2 : r1;
      std::string name = "cone_pair_r" + std::to_string(rr);
      if (std::any_of(r.bounds.begin(), r.bounds.end(),
                      [&](const BoundEntry& e) { return e.name == name; }))
        continue;
      r.bounds.push_back({name, bounds::Rational::of(bounds::cone_pair_bound(n, rr, q)),
                          "conjectured; rank-" + std::to_string(rr) +
                              " quadric meeting a degenerate quadric",
                          other <= n});
    }
  }
  return r;
}

ordered_json pair_report_json(const Field& f, const PairReport& r) {
  ordered_json j;
  j["order"] = r.order;
  if (r.common_hyperplane)
    j["common_hyperplane"] = r.common_hyperplane->str(f);
  else
    j["common_hyperplane"] = nullptr;
  j["count"] = r.count;
  j["bound_theorem"] = r.bound_theorem;
  ordered_json bl = ordered_json::array();
  for (const auto& b : r.bounds) {
    ordered_json e;
    e["name"] = b.name;
    if (b.value.is_integer())
      e["value"] = (long long)b.value.floor();
    else
      e["value"] = b.value.str();
    e["floor"] = (long long)b.value.floor();
    e["hypothesis"] = b.hypothesis;
    e["applies"] = b.applies;
    bl.push_back(std::move(e));
  }
  j["bounds"] = std::move(bl);
  j["slack"] = r.slack;
  return j;
}

std::vector<std::string> extremal_names() {
  return {"rank1", "rank2-hyperbolic", "rank2-elliptic", "rank3"};
}

std::pair<QuadraticForm, QuadraticForm> extremal_pair(const std::string& name, int n,
                                                      const Field& f) {
  if (n < 2) throw std::invalid_argument("extremal pairs require n >= 2");
  QuadraticForm f1(f, n), f2(f, n);
  if (name == "rank1") {
    // repeated hyperplane against a quadric meeting it in two hyperplanes
    f1.set_coeff(2, 2, 1);
    f2.set_coeff(0, 1, 1);
    f2.set_coeff(2, 2, 1);
  } else if (name == "rank2-hyperbolic") {
    // (x0+x1)x2 + x2^2 and (x2+x0)x1 + x1^2
    f1.set_coeff(0, 2, 1);
    f1.set_coeff(1, 2, 1);
    f1.set_coeff(2, 2, 1);
    f2.set_coeff(1, 2, 1);
    f2.set_coeff(0, 1, 1);
    f2.set_coeff(1, 1, 1);
  } else if (name == "rank2-elliptic") {
    f1 = canonical_form(2, QuadricType::Elliptic, n, f);
    f2.set_coeff(0, 1, 1);
  } else if (name == "rank3") {
    // x0^2 + x1^2 - x2^2 and x0x1
    f1.set_coeff(0, 0, 1);
    f1.set_coeff(1, 1, 1);
    f1.set_coeff(2, 2, f.neg(1));
    f2.set_coeff(0, 1, 1);
  } else {
    throw std::invalid_argument("unknown extremal pair '" + name + "'");
  }
  return {std::move(f1), std::move(f2)};
}

}  // namespace quadrics
