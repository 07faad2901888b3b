#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quadrics/pair.hpp"

using namespace quadrics;

namespace {

QuadraticForm form_of(const Field& f, int n,
                      std::initializer_list<std::tuple<int, int, int>> terms) {
  QuadraticForm out(f, n);
  for (auto [i, j, c] : terms) out.set_coeff(i, j, f.from_int(c));
  return out;
}

}  // namespace

TEST_CASE("order on the worked examples") {
  Field f3 = Field::make(3);
  auto f1 = form_of(f3, 3, {{0, 1, 1}});
  auto f2 = form_of(f3, 3, {{0, 0, 1}, {1, 1, 1}, {2, 2, -1}});
  CHECK(order(f1, f2) == 3);
  CHECK(order(f1, f2) == oracles::brute_order(f1, f2));

  CHECK(order(f1, f1) == 2);
  auto nd = form_of(f3, 3, {{0, 1, 1}, {2, 3, 1}});
  CHECK(order(nd, f1) == 4);
  CHECK(order(nd, f2) == 4);

  Field f2f = Field::make(2);
  auto a = form_of(f2f, 2, {{0, 0, 1}});
  CHECK_THROWS_AS(order(a, f1), std::invalid_argument);  // mismatched ambient
}

TEST_CASE("order is symmetric and matches brute force on random pairs") {
  std::mt19937_64 rng(3);
  for (int q : {2, 3}) {
    Field f = Field::make(q);
    for (int n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 60; ++trial) {
        auto f1 = oracles::random_form(f, n, rng);
        auto f2 = oracles::random_form(f, n, rng);
        int w = order(f1, f2);
        CHECK(w == order(f2, f1));
        CHECK(w == oracles::brute_order(f1, f2));
        CHECK(w >= 1);
        CHECK(w <= n + 1);
      }
    }
  }
}

TEST_CASE("common hyperplane on the worked examples") {
  Field f3 = Field::make(3);
  auto shared = common_hyperplane(form_of(f3, 3, {{0, 1, 1}}), form_of(f3, 3, {{0, 2, 1}}));
  REQUIRE(shared.has_value());
  CHECK(shared->c == std::vector<Fel>{1, 0, 0, 0});

  CHECK(!common_hyperplane(form_of(f3, 3, {{0, 1, 1}}),
                           form_of(f3, 3, {{0, 0, 1}, {1, 1, 1}, {2, 2, -1}})));
  // repeated hyperplane against a rank-3 quadric containing it nowhere
  CHECK(!common_hyperplane(form_of(f3, 3, {{2, 2, 1}}),
                           form_of(f3, 3, {{0, 1, 1}, {2, 2, 1}})));
}

TEST_CASE("pair operations are symmetric in (f1, f2)") {
  std::mt19937_64 rng(71);
  Field f3 = Field::make(3);
  PointTable t(f3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    auto f1 = oracles::random_form(f3, 3, rng);
    auto f2 = oracles::random_form(f3, 3, rng);
    CHECK(order(f1, f2) == order(f2, f1));
    CHECK(intersection_count(f1, f2, t) == intersection_count(f2, f1, t));
    auto a = common_hyperplane(f1, f2);
    auto b = common_hyperplane(f2, f1);
    CHECK(a.has_value() == b.has_value());
    if (a && b) CHECK(a->c == b->c);
  }
}

TEST_CASE("factor test agrees with hyperplane enumeration on random pairs") {
  std::mt19937_64 rng(17);
  for (int q : {2, 3}) {
    Field f = Field::make(q);
    for (int n = 2; n <= 3; ++n) {
      PointTable t(f, n);
      for (int trial = 0; trial < 80; ++trial) {
        auto f1 = oracles::random_form(f, n, rng);
        auto f2 = oracles::random_form(f, n, rng);
        auto fast = common_hyperplane(f1, f2);
        auto brute = oracles::brute_common_hyperplane(f1, f2, t);
        CHECK(fast.has_value() == brute.has_value());
        if (fast) {
          CHECK(hyperplane_in_quadric(*fast, f1, t));
          CHECK(hyperplane_in_quadric(*fast, f2, t));
        }
      }
    }
  }
}

TEST_CASE("intersection counts on the catalogued pairs") {
  Field f3 = Field::make(3);
  PointTable t3(f3, 3);
  auto f1 = form_of(f3, 3, {{0, 0, 1}, {1, 1, 1}, {2, 2, -1}});
  auto f2 = form_of(f3, 3, {{0, 1, 1}});
  CHECK(intersection_count(f1, f2, t3) == 13);  // 4q + 1 at q = 3
  CHECK(intersection_count(f2, f1, t3) == 13);
  CHECK(intersection_count(f1, f1, t3) == classify(f1).point_count);

  Field f2f = Field::make(2);
  PointTable t2(f2f, 3);
  auto x22 = form_of(f2f, 3, {{2, 2, 1}});
  auto g = form_of(f2f, 3, {{0, 1, 1}, {2, 2, 1}});
  CHECK(intersection_count(x22, g, t2) == 5);  // 2q^{n-2} + pi_{n-3}
}

TEST_CASE("cone lift bound values") {
  CHECK(cone_lift_bound(4, 1, 3) == 13);
  CHECK(cone_lift_bound(0, 2, 3) == pi(1, 3));
  CHECK(cone_lift_bound(4, 2, 2) == 4 * 4 + pi(1, 2));
  CHECK_THROWS_AS(cone_lift_bound(-1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(cone_lift_bound(4, 0, 2), std::invalid_argument);
}

TEST_CASE("lifting a pair is a cone: count = base * q^{n-t} + pi_{n-t-1} exactly") {
  // base pair with 4 points in the plane at q = 2
  Field f2 = Field::make(2);
  PointTable tp(f2, 2);
  auto [b1, b2] = extremal_pair("rank2-hyperbolic", 2, f2);
  REQUIRE(intersection_count(b1, b2, tp) == 4);
  for (int n = 3; n <= 4; ++n) {
    PointTable tn(f2, n);
    auto [l1, l2] = embed_pair(b1, b2, n);
    CHECK(intersection_count(l1, l2, tn) == cone_lift_bound(4, n - 2, 2));
  }
  // 13-point base in P^3 at q = 3 lifted to P^4: 13q + 1 = 40
  Field f3 = Field::make(3);
  PointTable t3(f3, 3);
  auto [c1, c2] = extremal_pair("rank3", 3, f3);
  REQUIRE(intersection_count(c1, c2, t3) == 13);
  PointTable t4(f3, 4);
  auto [d1, d2] = embed_pair(c1, c2, 4);
  CHECK(intersection_count(d1, d2, t4) == 40);
  // lift of an empty base is the vertex
  auto e1 = form_of(f3, 2, {{0, 0, 1}, {1, 1, 1}});   // x0^2+x1^2: only (0:0:1)
  auto e2 = form_of(f3, 2, {{2, 2, 1}});              // x2^2: misses (0:0:1)
  REQUIRE(intersection_count(e1, e2, PointTable(f3, 2)) == 0);
  auto [g1, g2] = embed_pair(e1, e2, 4);
  CHECK(intersection_count(g1, g2, t4) == pi(1, 3));
}

TEST_CASE("random lifted pairs satisfy the cone identity") {
  std::mt19937_64 rng(29);
  for (int q : {2, 3}) {
    Field f = Field::make(q);
    PointTable tbase(f, 2), tlift(f, 4);
    for (int trial = 0; trial < 40; ++trial) {
      auto f1 = oracles::random_form(f, 2, rng);
      auto f2 = oracles::random_form(f, 2, rng);
      long long base = intersection_count(f1, f2, tbase);
      auto [l1, l2] = embed_pair(f1, f2, 4);
      CHECK(intersection_count(l1, l2, tlift) == base * q * q + pi(1, q));
    }
  }
}

TEST_CASE("pair report on the rank-3 pair at q = 3") {
  Field f3 = Field::make(3);
  PointTable t(f3, 3);
  auto [f1, f2] = extremal_pair("rank3", 3, f3);
  auto r = pair_report(f1, f2, t);
  CHECK(r.order == 3);
  CHECK(!r.common_hyperplane);
  CHECK(r.count == 13);
  CHECK(r.bound_theorem == 13);
  CHECK(r.slack == 0);
  // full order fails, so the leep_schueller entry must not apply
  for (const auto& b : r.bounds)
    if (b.name == "leep_schueller") CHECK(!b.applies);
  auto j = pair_report_json(f3, r);
  CHECK(j["count"] == 13);
  CHECK(j["common_hyperplane"].is_null());
}

TEST_CASE("pair report flags a common hyperplane and keeps the bound unasserted") {
  Field f2 = Field::make(2);
  PointTable t(f2, 3);
  auto f1 = form_of(f2, 3, {{0, 1, 1}});
  auto f2form = form_of(f2, 3, {{0, 2, 1}});
  auto r = pair_report(f1, f2form, t);
  REQUIRE(r.common_hyperplane.has_value());
  CHECK(r.common_hyperplane->str(f2) == "x0");
  for (const auto& b : r.bounds)
    if (b.name == "aubry" || b.name == "schmidt") CHECK(!b.applies);
}

TEST_CASE("rank-1 pair report example at (n, q) = (3, 2)") {
  Field f2 = Field::make(2);
  PointTable t(f2, 3);
  auto [f1, f2b] = extremal_pair("rank1", 3, f2);
  auto r = pair_report(f1, f2b, t);
  CHECK(r.count == 5);
  CHECK(r.bound_theorem == 9);
  CHECK(r.slack == 4);
  CHECK(!r.common_hyperplane);
}

TEST_CASE("simultaneous substitutions leave pair invariants unchanged") {
  std::mt19937_64 rng(31);
  for (int q : {2, 3}) {
    Field f = Field::make(q);
    for (int n = 2; n <= 3; ++n) {
      PointTable t(f, n);
      for (int trial = 0; trial < 40; ++trial) {
        auto f1 = oracles::random_form(f, n, rng);
        auto f2 = oracles::random_form(f, n, rng);
        auto m = linalg::random_invertible(f, n + 1, rng);
        auto g1 = substitute(f1, m), g2 = substitute(f2, m);
        CHECK(intersection_count(f1, f2, t) == intersection_count(g1, g2, t));
        CHECK(order(f1, f2) == order(g1, g2));
        CHECK(common_hyperplane(f1, f2).has_value() ==
              common_hyperplane(g1, g2).has_value());
      }
    }
  }
}

TEST_CASE("pair invariants are preserved by all of GL(3, F_2)") {
  Field f2 = Field::make(2);
  PointTable t(f2, 2);
  std::mt19937_64 rng(67);
  std::vector<std::pair<QuadraticForm, QuadraticForm>> pairs;
  for (int i = 0; i < 6; ++i)
    pairs.emplace_back(oracles::random_form(f2, 2, rng), oracles::random_form(f2, 2, rng));
  int gl = 0;
  for (unsigned bits = 0; bits < (1u << 9); ++bits) {
    linalg::Mat m(3, 3);
    for (int i = 0; i < 9; ++i) m.a[i] = (bits >> i) & 1;
    if (linalg::rank(f2, m) != 3) continue;
    ++gl;
    for (const auto& [f1, f2form] : pairs) {
      auto g1 = substitute(f1, m), g2 = substitute(f2form, m);
      CHECK(intersection_count(f1, f2form, t) == intersection_count(g1, g2, t));
      CHECK(order(f1, f2form) == order(g1, g2));
      CHECK(common_hyperplane(f1, f2form).has_value() == common_hyperplane(g1, g2).has_value());
    }
  }
  CHECK(gl == 168);
}

TEST_CASE("extremal fixtures by name") {
  CHECK(extremal_names().size() == 4);
  Field f2 = Field::make(2);
  for (const auto& name : extremal_names()) CHECK_NOTHROW(extremal_pair(name, 4, f2));
  CHECK_THROWS_AS(extremal_pair("rank9", 4, f2), std::invalid_argument);

  // the elliptic rank-2 fixture meets any quadric in exactly its vertex
  Field f3 = Field::make(3);
  for (int n : {3, 4}) {
    PointTable t(f3, n);
    auto [x, q] = extremal_pair("rank2-elliptic", n, f3);
    CHECK(classify(x).rank == 2);
    CHECK(classify(x).type == QuadricType::Elliptic);
    CHECK(intersection_count(x, q, t) == pi(n - 2, 3));
    CHECK(classify(x).point_count == pi(n - 2, 3));
  }
}

TEST_CASE("the rank2-hyperbolic fixture pair has a common line in the plane") {
  // Both forms share the factor x0+x1+x2; in the plane the intersection is
  // that line plus one extra point, q + 2 points, equal to 4 only at q = 2.
  for (int q : {2, 3, 4, 5}) {
    Field f = q == 4 ? Field::make(2, 2) : Field::make(q);
    PointTable t(f, 2);
    auto [f1, f2] = extremal_pair("rank2-hyperbolic", 2, f);
    CHECK(intersection_count(f1, f2, t) == q + 2);
    CHECK(common_hyperplane(f1, f2).has_value());
  }
}
