#include "quadrics/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadrics {

namespace {

// Dense polynomials over F_p, little-endian coefficients, trailing zeros
// allowed. Desk-scale degrees only.
using Poly = std::vector<int>;

int degree(const Poly& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

// Remainder of a modulo monic divisor d.
Poly poly_mod(Poly a, const Poly& d, int p) {
  int dd = degree(d);
  for (int i = degree(a); i >= dd; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j)
      a[i - dd + j] = ((a[i - dd + j] - c * d[j]) % p + p) % p;
  }
  a.resize(std::max(dd, 1));
  return a;
}

// Decode k < p^len into len base-p digits.
Poly digits(long long k, int p, int len) {
  Poly d(len, 0);
  for (int i = 0; i < len; ++i) {
    d[i] = int(k % p);
    k /= p;
  }
  return d;
}

bool is_irreducible(const Poly& f, int p) {
  int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (int d = 1; 2 * d <= n; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long k = 0; k < count; ++k) {
      Poly div = digits(k, p, d + 1);
      div[d] = 1;
      if (degree(poly_mod(f, div, p)) < 0) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree m over F_p, ordered by the base-p
// integer encoding of the non-leading coefficients.
Poly find_modulus(int p, int m) {
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (long long k = 0; k < count; ++k) {
    Poly f = digits(k, p, m + 1);
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

Field Field::make(int p, int m, int cap) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kHardCap) throw std::invalid_argument("field cardinality exceeds the hard cap");
  }
  if (q > cap)
    throw std::invalid_argument("field cardinality " + std::to_string(q) +
                                " exceeds the configured cap " + std::to_string(cap));

  Field f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = int(q);
  f.modulus_ = m == 1 ? Poly{0, 1} : find_modulus(p, m);

  const int Q = f.q_;
  f.add_.assign(std::size_t(Q) * Q, 0);
  f.mul_.assign(std::size_t(Q) * Q, 0);
  f.neg_.assign(Q, 0);
  f.inv_.assign(Q, 0);
  f.sqrt_.assign(Q, kNoSqrt);

  for (int a = 0; a < Q; ++a) {
    Poly pa = digits(a, p, m);
    // negation
    long long nv = 0;
    for (int i = m - 1; i >= 0; --i) nv = nv * p + (p - pa[i]) % p;
    f.neg_[a] = Fel(nv);
    for (int b = a; b < Q; ++b) {
      Poly pb = digits(b, p, m);
      long long sv = 0;
      for (int i = m - 1; i >= 0; --i) sv = sv * p + (pa[i] + pb[i]) % p;
      f.add_[std::size_t(a) * Q + b] = Fel(sv);
      f.add_[std::size_t(b) * Q + a] = Fel(sv);
      Poly prod = poly_mod(poly_mul(pa, pb, p), f.modulus_, p);
      long long mv = 0;
      for (int i = m - 1; i >= 0; --i) mv = mv * p + (i < int(prod.size()) ? prod[i] : 0);
      f.mul_[std::size_t(a) * Q + b] = Fel(mv);
      f.mul_[std::size_t(b) * Q + a] = Fel(mv);
    }
  }
  for (int a = 0; a < Q; ++a) {
    Fel sq = f.mul_[std::size_t(a) * Q + a];
    if (f.sqrt_[sq] == kNoSqrt) f.sqrt_[sq] = Fel(a);
    for (int b = 0; b < Q; ++b)
      if (f.mul_[std::size_t(a) * Q + b] == 1) f.inv_[a] = Fel(b);
  }
  return f;
}

Fel Field::inv(Fel a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

Fel Field::pow(Fel a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Fel r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fel Field::sqrt(Fel a) const {
  if (sqrt_[a] == kNoSqrt) throw std::domain_error("element is not a square");
  return sqrt_[a];
}

Fel Field::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return Fel(r);
}

Fel Field::from_coeffs(std::span<const int> c) const {
  if (int(c.size()) > m_) throw std::invalid_argument("coefficient vector longer than extension degree");
  long long v = 0;
  for (int i = int(c.size()) - 1; i >= 0; --i) {
    long long r = c[i] % p_;
    if (r < 0) r += p_;
    v = v * p_ + r;
  }
  return Fel(v);
}

std::vector<int> Field::coeffs(Fel a) const {
  std::vector<int> c(m_);
  int v = a;
  for (int i = 0; i < m_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

std::string Field::str(Fel a) const {
  if (m_ == 1) return std::to_string(a);
  std::string s = "[";
  auto c = coeffs(a);
  for (int i = 0; i < m_; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  s += ']';
  return s;
}

const Field* Elem::same(const Elem& o) const {
  if (field_ != o.field_ && *field_ != *o.field_)
    throw std::invalid_argument("operands belong to different fields");
  return field_;
}

FieldExtension extend_field(const Field& base, int k, int cap) {
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  Field ext = Field::make(base.p(), base.m() * k, cap);
  std::vector<Fel> embed(base.q());
  if (base.m() == 1) {
    for (int a = 0; a < base.q(); ++a) embed[a] = Fel(a);  // constants map to constants
  } else {
    // Image of the base generator: the smallest root of the base modulus in
    // the extension (deterministic choice among the m conjugates).
    Fel root = 0;
    bool found = false;
    for (int x = 0; x < ext.q() && !found; ++x) {
      Fel acc = 0;
      for (int i = int(base.modulus().size()) - 1; i >= 0; --i)
        acc = ext.add(ext.mul(acc, Fel(x)), ext.from_int(base.modulus()[i]));
      if (acc == 0) {
        root = Fel(x);
        found = true;
      }
    }
    if (!found) throw std::logic_error("base modulus has no root in the extension");
    for (int a = 0; a < base.q(); ++a) {
      auto digits = base.coeffs(Fel(a));
      Fel acc = 0;
      for (int i = base.m() - 1; i >= 0; --i)
        acc = ext.add(ext.mul(acc, root), ext.from_int(digits[i]));
      embed[a] = acc;
    }
  }
  return {std::move(ext), std::move(embed)};
}

}  // namespace quadrics
