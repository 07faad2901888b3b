#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "quadrics/quadric.hpp"

using namespace quadrics;

namespace {

QuadraticForm form_of(const Field& f, int n,
                      std::initializer_list<std::tuple<int, int, int>> terms) {
  QuadraticForm out(f, n);
  for (auto [i, j, c] : terms) out.set_coeff(i, j, f.from_int(c));
  return out;
}

void check_radical_matches_brute_force(const QuadraticForm& f) {
  auto brute = oracles::brute_radical_set(f);
  auto basis = vanishing_radical(f);
  REQUIRE(oracles::subspace_dim(f.field(), brute.size()) == int(basis.size()));
  std::set<std::vector<Fel>> set(brute.begin(), brute.end());
  for (const auto& v : basis) CHECK(set.count(v) == 1);
  CHECK(linalg::rank_of_rows(f.field(), basis) == int(basis.size()));
}

}  // namespace

TEST_CASE("evaluation at points and vectors") {
  Field f2 = Field::make(2);
  auto f = form_of(f2, 3, {{0, 1, 1}});
  CHECK(f.evaluate_point(ProjPoint{{1, 0, 0, 1}}) == 0);
  auto g = form_of(f2, 3, {{2, 2, 1}});
  CHECK(g.evaluate_vector(std::vector<Fel>{0, 0, 1, 0}) == 1);

  Field f3 = Field::make(3);
  auto h = form_of(f3, 3, {{0, 0, 1}, {1, 1, 1}, {2, 2, -1}});
  for (int a = 0; a < 3; ++a)
    CHECK(h.evaluate_vector(std::vector<Fel>{0, 1, 1, Fel(a)}) == 0);

  CHECK_THROWS_AS(f.evaluate_point(ProjPoint{{1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("vanishing radical on the worked examples") {
  Field f2 = Field::make(2);
  // x0x1 in P^3: radical spanned by e2, e3
  auto f = form_of(f2, 3, {{0, 1, 1}});
  auto basis = vanishing_radical(f);
  REQUIRE(basis.size() == 2);
  std::set<std::vector<Fel>> span(basis.begin(), basis.end());
  CHECK(span.count({0, 0, 1, 0}) == 1);
  CHECK(span.count({0, 0, 0, 1}) == 1);
  check_radical_matches_brute_force(f);

  // x2^2 in P^3, char 2: B vanishes but F(e2) != 0, so dim V = 3, rank 1
  auto g = form_of(f2, 3, {{2, 2, 1}});
  CHECK(vanishing_radical(g).size() == 3);
  CHECK(rank(g) == 1);
  check_radical_matches_brute_force(g);

  // non-degenerate: V = 0
  auto h = form_of(f2, 3, {{0, 1, 1}, {2, 3, 1}});
  CHECK(vanishing_radical(h).empty());
  CHECK(rank(h) == 4);

  CHECK_THROWS_AS(vanishing_radical(QuadraticForm(f2, 2)), std::invalid_argument);
}

TEST_CASE("rank on the worked examples") {
  Field f3 = Field::make(3);
  CHECK(rank(form_of(f3, 3, {{0, 1, 1}})) == 2);
  CHECK(rank(form_of(f3, 3, {{0, 0, 1}, {1, 1, 1}, {2, 2, -1}})) == 3);
  CHECK(rank(form_of(f3, 3, {{2, 2, 1}})) == 1);
  Field f2 = Field::make(2);
  CHECK(rank(form_of(f2, 3, {{2, 2, 1}})) == 1);
}

TEST_CASE("radical matches the brute-force definition on every form, q=2, n<=3") {
  Field f2 = Field::make(2);
  for (int n = 1; n <= 3; ++n) {
    const int nm = mono_count(n);
    auto total = proj_vector_count(nm, 2);
    QuadraticForm f(f2, n);
    for (unsigned long long r = 0; r < total; ++r) {
      f.raw_coeffs() = proj_vector_unrank(f2, nm, r);
      check_radical_matches_brute_force(f);
    }
  }
}

TEST_CASE("radical matches the brute-force definition on every form, q=3, n<=3") {
  Field f3 = Field::make(3);
  for (int n = 1; n <= 3; ++n) {
    const int nm = mono_count(n);
    auto total = proj_vector_count(nm, 3);
    QuadraticForm f(f3, n);
    for (unsigned long long r = 0; r < total; ++r) {
      f.raw_coeffs() = proj_vector_unrank(f3, nm, r);
      auto brute = oracles::brute_radical_set(f);
      auto basis = vanishing_radical(f);
      REQUIRE(oracles::subspace_dim(f3, brute.size()) == int(basis.size()));
    }
  }
}

TEST_CASE("radical in a char-2 extension field (F_4)") {
  Field f4 = Field::make(2, 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    auto f = oracles::random_form(f4, 2, rng);
    check_radical_matches_brute_force(f);
  }
}

TEST_CASE("non-degenerate point counts match the closed forms, q in {2,3,4,5}, r <= 6") {
  for (int q : {2, 3, 4, 5}) {
    Field f = q == 4 ? Field::make(2, 2) : Field::make(q);
    for (int r = 1; r <= 6; ++r) {
      const int n = r - 1;
      PointTable t(f, n);
      if (r % 2 == 1) {
        auto g = canonical_form(r, QuadricType::Parabolic, n, f);
        CHECK(oracles::brute_count(g, t) == nondegenerate_count(r, QuadricType::Parabolic, q));
      } else {
        auto h = canonical_form(r, QuadricType::Hyperbolic, n, f);
        auto e = canonical_form(r, QuadricType::Elliptic, n, f);
        CHECK(oracles::brute_count(h, t) == nondegenerate_count(r, QuadricType::Hyperbolic, q));
        CHECK(oracles::brute_count(e, t) == nondegenerate_count(r, QuadricType::Elliptic, q));
        CHECK(nondegenerate_count(r, QuadricType::Hyperbolic, q) >
              nondegenerate_count(r, QuadricType::Elliptic, q));
      }
    }
  }
}

TEST_CASE("classification on the worked examples") {
  Field f2 = Field::make(2);
  auto prof = classify(form_of(f2, 3, {{0, 1, 1}, {2, 3, 1}}));
  CHECK(prof.rank == 4);
  CHECK(prof.type == QuadricType::Hyperbolic);
  CHECK(prof.point_count == 9);  // (q+1)^2
  CHECK(prof.vertex_dim == -1);

  auto ell = classify(form_of(f2, 3, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  CHECK(ell.rank == 2);
  CHECK(ell.type == QuadricType::Elliptic);
  CHECK(ell.base_count == 0);
  CHECK(ell.point_count == 3);  // pi_1

  Field f3 = Field::make(3);
  auto par = classify(form_of(f3, 2, {{0, 0, 1}, {1, 2, 1}}));
  CHECK(par.rank == 3);
  CHECK(par.type == QuadricType::Parabolic);
  CHECK(par.point_count == 4);  // q + 1
}

TEST_CASE("cone identity: point count = base_count * q^{n-r+1} + pi_{n-r}") {
  std::mt19937_64 rng(5);
  for (int q : {2, 3}) {
    Field f = Field::make(q);
    for (int n = 1; n <= 3; ++n) {
      PointTable t(f, n);
      for (int trial = 0; trial < 120; ++trial) {
        auto g = oracles::random_form(f, n, rng);
        auto prof = classify(g);
        long long lift = 1;
        for (int i = 0; i < n - prof.rank + 1; ++i) lift *= q;
        CHECK(prof.point_count == prof.base_count * lift + pi(n - prof.rank, q));
        CHECK(prof.point_count == oracles::brute_count(g, t));
        CHECK(prof.vertex_dim == n - prof.rank);
        CHECK(int(prof.vertex_basis.size()) == n + 1 - prof.rank);
      }
    }
  }
}

TEST_CASE("canonical forms round-trip through classification") {
  for (int q : {2, 3, 4, 5}) {
    Field f = q == 4 ? Field::make(2, 2) : Field::make(q);
    for (int n = 1; n <= 5; ++n)
      for (int r = 1; r <= n + 1; ++r) {
        if (r % 2 == 1) {
          auto prof = classify(canonical_form(r, QuadricType::Parabolic, n, f));
          CHECK(prof.rank == r);
          CHECK(prof.type == QuadricType::Parabolic);
        } else {
          auto ph = classify(canonical_form(r, QuadricType::Hyperbolic, n, f));
          CHECK(ph.rank == r);
          CHECK(ph.type == QuadricType::Hyperbolic);
          auto pe = classify(canonical_form(r, QuadricType::Elliptic, n, f));
          CHECK(pe.rank == r);
          CHECK(pe.type == QuadricType::Elliptic);
        }
      }
  }
}

TEST_CASE("the canonical rank-4 elliptic form in P^3(F_2) is the expected one") {
  Field f2 = Field::make(2);
  auto e = canonical_form(4, QuadricType::Elliptic, 3, f2);
  // x0x1 + x2^2 + x2x3 + x3^2
  CHECK(e == form_of(f2, 3, {{0, 1, 1}, {2, 2, 1}, {2, 3, 1}, {3, 3, 1}}));
  PointTable t(f2, 3);
  CHECK(oracles::brute_count(e, t) == 5);  // q^2 + 1
}

TEST_CASE("canonical_form rejects incompatible arguments") {
  Field f2 = Field::make(2);
  CHECK_THROWS_AS(canonical_form(3, QuadricType::Hyperbolic, 3, f2), std::invalid_argument);
  CHECK_THROWS_AS(canonical_form(2, QuadricType::Parabolic, 3, f2), std::invalid_argument);
  CHECK_THROWS_AS(canonical_form(5, QuadricType::Parabolic, 3, f2), std::invalid_argument);
}

TEST_CASE("rank and type are invariant under the full GL(4, F_2)") {
  Field f2 = Field::make(2);
  std::vector<QuadraticForm> reps;
  std::vector<std::pair<int, QuadricType>> expect;
  for (int r = 1; r <= 4; ++r) {
    if (r % 2 == 1) {
      reps.push_back(canonical_form(r, QuadricType::Parabolic, 3, f2));
      expect.emplace_back(r, QuadricType::Parabolic);
    } else {
      reps.push_back(canonical_form(r, QuadricType::Hyperbolic, 3, f2));
      expect.emplace_back(r, QuadricType::Hyperbolic);
      reps.push_back(canonical_form(r, QuadricType::Elliptic, 3, f2));
      expect.emplace_back(r, QuadricType::Elliptic);
    }
  }
  int gl_size = 0;
  for (unsigned bits = 0; bits < (1u << 16); ++bits) {
    linalg::Mat m(4, 4);
    for (int i = 0; i < 16; ++i) m.a[i] = (bits >> i) & 1;
    if (linalg::rank(f2, m) != 4) continue;
    ++gl_size;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      auto prof = classify(substitute(reps[k], m));
      CHECK(prof.rank == expect[k].first);
      CHECK(prof.type == expect[k].second);
    }
  }
  CHECK(gl_size == 20160);  // (16-1)(16-2)(16-4)(16-8)
}

TEST_CASE("rank and type are invariant under sampled substitutions, q = 3") {
  Field f3 = Field::make(3);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    auto f = oracles::random_form(f3, 3, rng);
    auto prof = classify(f);
    auto m = linalg::random_invertible(f3, 4, rng);
    auto prof2 = classify(substitute(f, m));
    CHECK(prof.rank == prof2.rank);
    CHECK(prof.type == prof2.type);
    CHECK(prof.point_count == prof2.point_count);
  }
}

TEST_CASE("split_linear_factors on the worked examples") {
  Field f2 = Field::make(2);
  auto rep = split_linear_factors(form_of(f2, 3, {{2, 2, 1}}));
  REQUIRE(rep.has_value());
  CHECK(rep->first.c == std::vector<Fel>{0, 0, 1, 0});
  CHECK(rep->second.c == std::vector<Fel>{0, 0, 1, 0});

  auto hyp = split_linear_factors(form_of(f2, 3, {{0, 1, 1}}));
  REQUIRE(hyp.has_value());
  std::set<std::vector<Fel>> factors{hyp->first.c, hyp->second.c};
  CHECK(factors.count({1, 0, 0, 0}) == 1);
  CHECK(factors.count({0, 1, 0, 0}) == 1);

  CHECK(!split_linear_factors(form_of(f2, 3, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}})));
  CHECK(!split_linear_factors(form_of(f2, 3, {{0, 1, 1}, {2, 3, 1}})));  // rank 4
  Field f3 = Field::make(3);
  CHECK(!split_linear_factors(form_of(f3, 3, {{0, 0, 1}, {1, 1, 1}, {2, 2, -1}})));  // rank 3
}

TEST_CASE("split factors multiply back to the form exactly") {
  std::mt19937_64 rng(37);
  for (int q : {2, 3, 4, 5}) {
    Field f = q == 4 ? Field::make(2, 2) : Field::make(q);
    const int n = 3;
    int split_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
      // random product of two linear forms, possibly proportional
      LinearForm a, b;
      a.c.resize(n + 1);
      b.c.resize(n + 1);
      bool za = true, zb = true;
      for (int i = 0; i <= n; ++i) {
        a.c[i] = Fel(rng() % q);
        b.c[i] = Fel(rng() % q);
        za &= a.c[i] == 0;
        zb &= b.c[i] == 0;
      }
      if (za || zb) continue;
      auto g = product(f, n, a, b);
      if (g.is_zero()) continue;  // char 2 can cancel: L * L with a = b scaled
      auto s = split_linear_factors(g);
      REQUIRE(s.has_value());
      ++split_seen;
      CHECK(product(f, n, s->first, s->second) == g);
    }
    CHECK(split_seen > 100);
  }
}

TEST_CASE("substitute composes with evaluation") {
  std::mt19937_64 rng(41);
  Field f3 = Field::make(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = oracles::random_form(f3, 3, rng);
    auto m = linalg::random_invertible(f3, 4, rng);
    auto g = substitute(f, m);
    for (int probe = 0; probe < 20; ++probe) {
      std::vector<Fel> x(4);
      for (auto& v : x) v = Fel(rng() % 3);
      CHECK(g.evaluate_vector(x) == f.evaluate_vector(linalg::apply(f3, m, x)));
    }
  }
}

TEST_CASE("embed keeps coefficients and rejects non-enlarging targets") {
  Field f2 = Field::make(2);
  auto f = form_of(f2, 2, {{0, 1, 1}, {2, 2, 1}});
  auto g = embed(f, 4);
  CHECK(g.n() == 4);
  CHECK(g.coeff(0, 1) == 1);
  CHECK(g.coeff(2, 2) == 1);
  CHECK(g.coeff(3, 4) == 0);
  CHECK_THROWS_AS(embed(f, 2), std::invalid_argument);
}
