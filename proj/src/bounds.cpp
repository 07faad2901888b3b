#include "quadrics/bounds.hpp"

#include <stdexcept>

namespace quadrics::bounds {

namespace {

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("bound value overflows");
  return out;
}

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("bound value overflows");
  return out;
}

// q^e, e >= 0, checked.
Int qpow(Int q, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent in a bound formula");
  Int r = 1;
  while (e-- > 0) r = checked_mul(r, q);
  return r;
}

void require_q(Int q) {
  if (q < 2) throw std::invalid_argument("bounds require q >= 2");
}

}  // namespace

std::string int_str(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  std::string s;
  while (u > 0) {
    s += char('0' + int(u % 10));
    u /= 10;
  }
  if (neg) s += '-';
  return {s.rbegin(), s.rend()};
}

Rational Rational::make(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Rational Rational::operator+(const Rational& o) const {
  return make(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
              checked_mul(den, o.den));
}

Rational Rational::operator*(const Rational& o) const {
  return make(checked_mul(num, o.num), checked_mul(den, o.den));
}

bool Rational::operator<(const Rational& o) const {
  return checked_mul(num, o.den) < checked_mul(o.num, den);
}

bool Rational::operator==(const Rational& o) const {
  return num == o.num && den == o.den;
}

Int Rational::floor() const {
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::string Rational::str() const {
  if (den == 1) return int_str(num);
  return int_str(num) + "/" + int_str(den);
}

Int pi_big(int n, Int q) {
  require_q(q);
  if (n < 0) return 0;
  Int sum = 0;
  for (int i = 0; i <= n; ++i) sum = checked_add(checked_mul(sum, q), 1);
  return sum;
}

Rational schmidt_bound(int n, Int q) {
  require_q(q);
  if (n < 2) throw std::invalid_argument("schmidt bound requires n >= 2");
  Int core = checked_mul(2, checked_add(checked_mul(4, qpow(q, n - 2)),
                                        checked_mul(4, pi_big(n - 3, q))));
  return Rational::of(core) + Rational::make(7, q - 1);
}

Rational aubry_bound(int n, Int q) {
  require_q(q);
  if (n < 2) throw std::invalid_argument("aubry bound requires n >= 2");
  Int core = checked_mul(2, checked_add(checked_mul(4, qpow(q, n - 2)), pi_big(n - 3, q)));
  return Rational::of(core) + Rational::make(1, q - 1);
}

Int ls_bound(int n, Int q) {
  require_q(q);
  if (n < 3) throw std::invalid_argument("leep-schueller bound requires n >= 3");
  Int core = checked_add(checked_mul(2, qpow(q, n - 2)), pi_big(n - 3, q));
  if ((n + 1) % 2 == 0)
    return checked_add(core,
                       checked_add(checked_mul(2, qpow(q, (n - 1) / 2)), -qpow(q, (n - 3) / 2)));
  return checked_add(core, qpow(q, n / 2));
}

Int two_quadrics_bound(int n, Int q) {
  require_q(q);
  if (n < 2) throw std::invalid_argument("two-quadrics bound requires n >= 2");
  return checked_add(checked_mul(4, qpow(q, n - 2)), pi_big(n - 3, q));
}

std::vector<EhBranch> eh_bound(int n, Int q) {
  require_q(q);
  if (n < 3) throw std::invalid_argument("eh bound requires n >= 3");
  const bool even = (n + 1) % 2 == 0;
  Int core = checked_add(checked_mul(2, qpow(q, n - 2)), pi_big(n - 3, q));
  std::vector<EhBranch> out;
  out.push_back({"eh_even_a", "n+1 >= 4 and even", even,
                 even ? checked_add(core, checked_add(checked_mul(2, qpow(q, (n - 1) / 2)),
                                                      -qpow(q, (n - 3) / 2)))
                      : 0});
  out.push_back({"eh_even_b", "n+1 >= 4 and even", even,
                 even ? checked_add(core, qpow(q, (n - 3) / 2)) : 0});
  out.push_back({"eh_odd", "n+1 >= 5 and odd", !even,
                 !even ? checked_add(core, checked_mul(2, qpow(q, (n - 2) / 2))) : 0});
  return out;
}

Int eh_bound_max(int n, Int q) {
  Int best = 0;
  bool any = false;
  for (const auto& b : eh_bound(n, q)) {
    if (!b.applies) continue;
    if (!any || b.value > best) best = b.value;
    any = true;
  }
  if (!any) throw std::logic_error("no applicable eh branch");
  return best;
}

Int cone_pair_bound(int n, int r, Int q) {
  if (r < 4) throw std::invalid_argument("cone-pair bound requires rank >= 4");
  if (r > n + 1) throw std::invalid_argument("rank exceeds n+1");
  return checked_add(checked_mul(eh_bound_max(r - 1, q), qpow(q, n - r + 1)), pi_big(n - r, q));
}

Int tss_bound(Int d, int s, Int q) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  return checked_add(checked_mul(d, qpow(q, s)), pi_big(s - 1, q));
}

Int lachaud_bound(Int d, int s, Int q) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  return checked_mul(d, pi_big(s, q));
}

Int lachaud_conj_bound(Int d, int s, int n, Int q) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  Int tail = pi_big(2 * s - n, q);
  return checked_add(checked_mul(d, checked_add(pi_big(s, q), -tail)), tail);
}

BoundsTable make_bounds_table(int n, Int q, std::optional<Int> d, std::optional<int> s,
                              std::optional<int> r) {
  BoundsTable t;
  t.n = n;
  t.q = q;
  t.d = d;
  t.s = s;
  t.r = r;
  if (n >= 2) {
    t.entries.push_back({"two_quadrics", Rational::of(two_quadrics_bound(n, q)),
                         "pair of quadrics, no common hyperplane"});
    t.entries.push_back({"aubry", aubry_bound(n, q), "pair of quadrics, no common component"});
    t.entries.push_back({"schmidt", schmidt_bound(n, q), "pair of quadrics, no common component"});
  }
  if (n >= 3) {
    t.entries.push_back({"leep_schueller", Rational::of(ls_bound(n, q)),
                         "pair of quadrics of full order"});
    for (const auto& b : eh_bound(n, q)) {
      if (!b.applies) continue;
      t.entries.push_back({b.name, Rational::of(b.value),
                           "one quadric non-degenerate; " + b.condition});
    }
  }
  if (r && *r >= 4 && *r <= n + 1)
    t.entries.push_back({"cone_pair", Rational::of(cone_pair_bound(n, *r, q)),
                         "conjectured; degenerate rank-" + std::to_string(*r) +
                             " quadric meeting another degenerate quadric"});
  if (d && s) {
    t.entries.push_back({"tss", Rational::of(tss_bound(*d, *s, q)),
                         "algebraic set of degree d, dimension s (proven for codimension 1, "
                         "conjectured in general)"});
    t.entries.push_back({"lachaud", Rational::of(lachaud_bound(*d, *s, q)),
                         "algebraic set of degree d, dimension s"});
    t.entries.push_back({"lachaud_conj", Rational::of(lachaud_conj_bound(*d, *s, n, q)),
                         "conjectured; algebraic set of degree d, dimension s"});
  }
  return t;
}

}  // namespace quadrics::bounds
