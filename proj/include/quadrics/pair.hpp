#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quadrics/bounds.hpp"
#include "quadrics/quadric.hpp"

namespace quadrics {

using ordered_json = nlohmann::ordered_json;

/// Order w(Q1, Q2): n + 1 - dim(V(f1) ∩ V(f2)), the minimum number of
/// variables needed to write both forms after one invertible change of
/// variables. Throws on mismatched ambients or zero forms.
int order(const QuadraticForm& f1, const QuadraticForm& f2);

/// A hyperplane contained in both quadrics, i.e. a shared linear factor of
/// the two forms (normalized), when one exists.
std::optional<LinearForm> common_hyperplane(const QuadraticForm& f1, const QuadraticForm& f2);

/// True iff Z(l) is contained in Z(f), i.e. l divides f. Enumerates the
/// hyperplane's points; used as the cross-check for the factor test.
bool hyperplane_in_quadric(const LinearForm& l, const QuadraticForm& f, const PointTable& table);

/// Exact |Q1 ∩ Q2| by evaluation over the point table (short-circuits on f1).
long long intersection_count(const QuadraticForm& f1, const QuadraticForm& f2,
                             const PointTable& table);

/// m q^l + pi_{l-1}: the cone-lifting bound for a base intersection of size
/// m raised l dimensions.
long long cone_lift_bound(long long m, int l, long long q);

/// Reinterprets a pair over P^t in P^n (t < n). The lifted intersection is
/// the cone over the base one: count = base * q^{n-t} + pi_{n-t-1} exactly.
std::pair<QuadraticForm, QuadraticForm> embed_pair(const QuadraticForm& f1,
                                                   const QuadraticForm& f2, int n);

struct BoundEntry {
  std::string name;
  bounds::Rational value;
  std::string hypothesis;
  bool applies = false;  // hypothesis satisfied by this pair
};

struct PairReport {
  int n = 0;
  int order = 0;
  std::optional<LinearForm> common_hyperplane;
  long long count = 0;
  long long bound_theorem = 0;  // 4q^{n-2} + pi_{n-3}
  std::vector<BoundEntry> bounds;
  long long slack = 0;  // bound_theorem - count; asserted only in hypothesis
};

/// Assembles order, hyperplane status, the exact count, the sharp bound and
/// every catalogued bound with its hypothesis evaluated for this pair.
/// Requires n >= 2 and a table over the same space.
PairReport pair_report(const QuadraticForm& f1, const QuadraticForm& f2,
                       const PointTable& table);

/// Flat JSON: order, common_hyperplane, count, bound_theorem, bounds, slack.
ordered_json pair_report_json(const Field& f, const PairReport& r);

/// Named extremal pairs attaining the catalogued bounds, by the rank/type of
/// the first form:
///   rank1:            x2^2            and x0x1 + x2^2
///   rank2-hyperbolic: (x0+x1)x2+x2^2  and (x2+x0)x1+x1^2
///   rank2-elliptic:   irreducible in (x0,x1) and x0x1
///   rank3:            x0^2+x1^2-x2^2  and x0x1
std::vector<std::string> extremal_names();
std::pair<QuadraticForm, QuadraticForm> extremal_pair(const std::string& name, int n,
                                                      const Field& f);

}  // namespace quadrics
